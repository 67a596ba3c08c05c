#include "tropfrieze/example.hpp"

#include <array>

namespace tropfrieze {

namespace {

constexpr int kCycle = 9;
constexpr int kD = 3;

const std::array<const char*, kCycle> kNames = {
    "P(1)", "P(2)", "P(3)", "P(4)", "I(4)", "S3P(1)", "S3P(2)", "S3P(3)", "S3P(4)"};

// suspension moves 4 steps against the arrows, i.e. 5 steps along them
constexpr int kShift = 5;

FreeAbelianElement simple_class(const CategorySpec& spec, std::initializer_list<Coeff> coeffs) {
    return FreeAbelianElement(spec.simple_basis(), std::vector<Coeff>(coeffs));
}

FreeAbelianElement tilting_elem(const Basis& tilting, std::initializer_list<Coeff> coeffs) {
    return FreeAbelianElement(tilting, std::vector<Coeff>(coeffs));
}

}  // namespace

CategorySpec builtin_ot_a4() {
    CategorySpec spec;
    spec.d = kD;
    for (const char* n : kNames) spec.indecs.emplace_back(n);
    for (int i = 0; i < kCycle; ++i)
        spec.suspension[spec.indecs[i]] = spec.indecs[(i + kShift) % kCycle];

    spec.hom.dims.assign(kCycle, std::vector<int>(kCycle, 0));
    for (int i = 0; i < kCycle; ++i) {
        spec.hom.dims[i][i] = 1;                // identity morphisms
        spec.hom.dims[i][(i + 1) % kCycle] = 1;  // one arrow per cycle step
    }

    spec.tilting = {"P(1)", "P(2)", "P(3)", "P(4)"};

    // P(i): identity resolution; S3P(i): suspension of a tilting summand;
    // I(4): the projective-injective resolution running through all of t.
    for (int i = 0; i < 4; ++i) {
        Angle res;
        res.terms.assign(kD + 2, ObjectExpr::zero());
        res.terms[kD] = ObjectExpr::single(spec.indecs[i]);
        res.terms[kD + 1] = ObjectExpr::single(spec.indecs[i]);
        spec.resolutions[spec.indecs[i]] = std::move(res);

        Angle sres;
        sres.terms.assign(kD + 2, ObjectExpr::zero());
        sres.terms[0] = ObjectExpr::single(spec.indecs[i]);
        sres.terms[kD + 1] = ObjectExpr::single(spec.indecs[5 + i]);
        spec.resolutions[spec.indecs[5 + i]] = std::move(sres);
    }
    {
        Angle res;
        for (int i = 0; i < 4; ++i) res.terms.push_back(ObjectExpr::single(spec.indecs[i]));
        res.terms.push_back(ObjectExpr::single("I(4)"));
        spec.resolutions["I(4)"] = std::move(res);
    }

    // nine window angles: window c runs [c, c+1, c+2, c+3, c+4]
    for (int c = 0; c < kCycle; ++c) {
        Angle a;
        for (int j = 0; j < kD + 2; ++j)
            a.terms.push_back(ObjectExpr::single(spec.indecs[(c + j) % kCycle]));
        a.gamma_nonzero = true;
        spec.angles.push_back(std::move(a));
    }
    // nine trivial angles: [s0, 0, 0, 0, Σᵈ s0]
    for (int p = 0; p < kCycle; ++p) {
        Angle a;
        a.terms.assign(kD + 2, ObjectExpr::zero());
        a.terms[0] = ObjectExpr::single(spec.indecs[p]);
        a.terms[kD + 1] = ObjectExpr::single(spec.indecs[(p + kShift) % kCycle]);
        a.gamma_nonzero = true;
        spec.angles.push_back(std::move(a));
    }

    // image classes: windows 5..8 hit the simples, windows 0..4 die;
    // trivial angles carry the full class of F(Σᵈ s0)
    const auto z = simple_class(spec, {0, 0, 0, 0});
    const std::array<FreeAbelianElement, 4> s = {
        simple_class(spec, {1, 0, 0, 0}), simple_class(spec, {0, 1, 0, 0}),
        simple_class(spec, {0, 0, 1, 0}), simple_class(spec, {0, 0, 0, 1})};
    for (int c = 0; c < 5; ++c) spec.angles[c].image_class = z;
    for (int c = 5; c < 9; ++c) spec.angles[c].image_class = s[c - 5];
    for (int p = 0; p < 4; ++p) spec.angles[9 + p].image_class = z;
    spec.angles[9 + 4].image_class = s[0];                           // F(P(1))
    spec.angles[9 + 5].image_class = simple_class(spec, {1, 1, 0, 0});  // F(P(2))
    spec.angles[9 + 6].image_class = simple_class(spec, {0, 1, 1, 0});  // F(P(3))
    spec.angles[9 + 7].image_class = simple_class(spec, {0, 0, 1, 1});  // F(P(4))
    spec.angles[9 + 8].image_class = s[3];                           // F(I(4))

    // pair for s0 at position p: window starting at Σᵈ s0 plus the trivial angle
    for (int p = 0; p < kCycle; ++p) {
        ExchangePairDecl pr;
        pr.s0 = spec.indecs[p];
        pr.s_top = spec.indecs[(p + kShift) % kCycle];
        pr.angle01 = (p + kShift) % kCycle;
        pr.angle02 = kCycle + p;
        spec.exchange_pairs.push_back(std::move(pr));
    }

    spec.calabi_yau_2d = true;
    return spec;
}

BuiltinFixtures builtin_fixtures() {
    const CategorySpec spec = builtin_ot_a4();
    const Basis tilting = spec.tilting_basis();

    BuiltinFixtures fx;
    fx.index_table_expected = {
        {"P(1)", tilting_elem(tilting, {1, 0, 0, 0})},
        {"P(2)", tilting_elem(tilting, {0, 1, 0, 0})},
        {"P(3)", tilting_elem(tilting, {0, 0, 1, 0})},
        {"P(4)", tilting_elem(tilting, {0, 0, 0, 1})},
        {"I(4)", tilting_elem(tilting, {-1, 1, -1, 1})},
        {"S3P(1)", tilting_elem(tilting, {-1, 0, 0, 0})},
        {"S3P(2)", tilting_elem(tilting, {0, -1, 0, 0})},
        {"S3P(3)", tilting_elem(tilting, {0, 0, -1, 0})},
        {"S3P(4)", tilting_elem(tilting, {0, 0, 0, -1})},
    };
    fx.theta_expected = {
        tilting_elem(tilting, {0, 1, -1, 1}),
        tilting_elem(tilting, {-1, 0, 1, -1}),
        tilting_elem(tilting, {1, -1, 0, 1}),
        tilting_elem(tilting, {-1, 1, -1, 0}),
    };
    fx.inequalities_expected = fx.theta_expected;
    fx.figure_values = {-17, -8, 2, 19, 26, 17, 8, -2, -19};
    for (const auto& a : spec.angles) fx.angle_labels.push_back(*a.image_class);
    fx.sample_phi = PhiVector{{-17, -8, 2, 19}};
    return fx;
}

}  // namespace tropfrieze
