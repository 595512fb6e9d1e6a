#include "farey/random_formula.hpp"

#include <vector>

namespace farey {

namespace {

Formula leaf(Rng& rng) {
    return std::bernoulli_distribution(0.8)(rng) ? Formula::gen() : Formula::zero();
}

Formula build(Rng& rng, std::uint64_t budget) {
    if (budget < 2) return leaf(rng);
    // A sum needs at least 5 symbols: "(X+X)".
    std::uniform_int_distribution<int> pick(0, 9);
    int choice = pick(rng);
    if (budget < 5 || choice < 3) {
        if (choice == 0 && budget < 5) return leaf(rng);
        return Formula::star(build(rng, budget - 1));
    }
    if (choice == 3) return leaf(rng);
    std::uint64_t inner = budget - 3;
    std::uniform_int_distribution<std::uint64_t> split(1, inner - 1);
    std::uint64_t left_budget = split(rng);
    return Formula::plus(build(rng, left_budget), build(rng, inner - left_budget));
}

// One rewrite at the root, chosen among the identities that apply.
Formula rewrite_root(const Formula& f, Rng& rng) {
    std::vector<int> options = {0, 1};  // x -> x**, x -> (x + 0)
    if (f.kind() == Formula::Kind::Star && f.child().kind() == Formula::Kind::Star)
        options.push_back(2);
    if (f.kind() == Formula::Kind::Plus) {
        options.push_back(3);
        if (f.left().kind() == Formula::Kind::Plus) options.push_back(4);
        if (f.right().kind() == Formula::Kind::Plus) options.push_back(5);
        // (a* + b)* + b  ->  (b* + a)* + a
        if (f.left().kind() == Formula::Kind::Star && f.left().child().kind() == Formula::Kind::Plus &&
            f.left().child().left().kind() == Formula::Kind::Star &&
            f.left().child().right() == f.right())
            options.push_back(6);
        if (f.right().is_zero()) options.push_back(7);
    }
    int op = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    switch (op) {
    case 0: return Formula::star(Formula::star(f));
    case 1: return Formula::plus(f, Formula::zero());
    case 2: return f.child().child();
    case 3: return Formula::plus(f.right(), f.left());
    case 4: return Formula::plus(f.left().left(), Formula::plus(f.left().right(), f.right()));
    case 5: return Formula::plus(Formula::plus(f.left(), f.right().left()), f.right().right());
    case 6: {
        const Formula& a = f.left().child().left().child();
        const Formula& b = f.right();
        return join(b, a);
    }
    default: return f.left();
    }
}

Formula rewrite_somewhere(const Formula& f, Rng& rng) {
    // Descend with probability proportional to subtree size, roughly.
    std::bernoulli_distribution stop(0.3);
    if (f.kind() == Formula::Kind::Zero || f.kind() == Formula::Kind::Gen || stop(rng))
        return rewrite_root(f, rng);
    if (f.kind() == Formula::Kind::Star) return Formula::star(rewrite_somewhere(f.child(), rng));
    if (std::bernoulli_distribution(0.5)(rng))
        return Formula::plus(rewrite_somewhere(f.left(), rng), f.right());
    return Formula::plus(f.left(), rewrite_somewhere(f.right(), rng));
}

}  // namespace

Formula random_formula(Rng& rng, std::uint64_t max_length) {
    std::uniform_int_distribution<std::uint64_t> target(1, max_length < 1 ? 1 : max_length);
    return build(rng, target(rng));
}

Formula random_equivalent(const Formula& f, Rng& rng, int steps) {
    Formula g = f;
    for (int i = 0; i < steps; ++i) g = rewrite_somewhere(g, rng);
    return g;
}

}  // namespace farey
