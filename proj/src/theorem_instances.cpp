#include "semiglue/theorems.hpp"

namespace semiglue {

namespace {

GluingSpec gluing(std::vector<Int> left, std::vector<Int> right, std::vector<Int> b, std::vector<Int> a) {
  return GluingSpec{NumericalSemigroup(std::move(left)), NumericalSemigroup(std::move(right)), std::move(b),
                    std::move(a)};
}

AffineSemigroup matrix_a() {
  return AffineSemigroup({NatVector{3, 0}, NatVector{5, 0}, NatVector{0, 1}, NatVector{1, 3}, NatVector{2, 3}});
}

AffineSemigroup on_axis(std::vector<Int> gens, std::size_t axis) {
  return axis_embedding(NumericalSemigroup(std::move(gens)), 2, axis);
}

TheoremInstance groebner_instance(std::string label, GluingSpec spec, RhoForm form, BlockOrder order,
                                  bool worked_example, bool misprint = false) {
  return {kGluingGroebner, std::move(label), worked_example, misprint,
          [spec = std::move(spec), form, order](const TheoremOptions& o) {
            return verify_gluing_groebner(spec, form, order, o);
          }};
}

TheoremInstance acm_instance(std::string label, GluingSpec spec, std::vector<Int> stated, bool worked_example) {
  return {kGluingAcm, std::move(label), worked_example, false,
          [spec = std::move(spec), stated = std::move(stated)](TheoremOptions o) {
            if (!stated.empty()) o.stated_generators = stated;
            return verify_gluing_acm(spec, o);
          }};
}

TheoremInstance star_instance(std::string label, GluingSpec spec, std::vector<Int> stated, bool worked_example,
                              bool misprint = false) {
  return {kStarTangentCone, std::move(label), worked_example, misprint,
          [spec = std::move(spec), stated = std::move(stated)](TheoremOptions o) {
            if (!stated.empty()) o.stated_generators = stated;
            return verify_star_tangent_cone(spec, o);
          }};
}

TheoremInstance gorenstein_instance(std::string label, GluingSpec spec, bool worked_example) {
  return {kGluingGorenstein, std::move(label), worked_example, false,
          [spec = std::move(spec)](const TheoremOptions& o) { return verify_gluing_gorenstein(spec, o); }};
}

TheoremInstance extension_instance(std::string label, ExtensionSpec spec, bool worked_example) {
  return {kExtensionPf, std::move(label), worked_example, false,
          [spec = std::move(spec)](const TheoremOptions& o) { return verify_extension_pf(spec, std::nullopt, o); }};
}

TheoremInstance join_instance(std::string label, AffineSemigroup left, AffineSemigroup right) {
  return {kJoinSifr, std::move(label), false, false,
          [left = std::move(left), right = std::move(right)](const TheoremOptions& o) {
            return verify_join_sifr(left, right, o);
          }};
}

template <class F>
HypothesisProbe probe(const char* theorem, std::string hypothesis, F run) {
  return {theorem, std::move(hypothesis), std::function<TheoremReport(const TheoremOptions&)>(std::move(run))};
}

HypothesisProbe groebner_probe(std::string hypothesis, GluingSpec spec) {
  return probe(kGluingGroebner, std::move(hypothesis), [spec = std::move(spec)](const TheoremOptions& o) {
    return verify_gluing_groebner(spec, RhoForm::Full, BlockOrder::XFirst, o);
  });
}

HypothesisProbe acm_probe(std::string hypothesis, GluingSpec spec) {
  return probe(kGluingAcm, std::move(hypothesis),
               [spec = std::move(spec)](const TheoremOptions& o) { return verify_gluing_acm(spec, o); });
}

HypothesisProbe star_probe(std::string hypothesis, GluingSpec spec) {
  return probe(kStarTangentCone, std::move(hypothesis),
               [spec = std::move(spec)](const TheoremOptions& o) { return verify_star_tangent_cone(spec, o); });
}

HypothesisProbe gorenstein_probe(std::string hypothesis, GluingSpec spec) {
  return probe(kGluingGorenstein, std::move(hypothesis),
               [spec = std::move(spec)](const TheoremOptions& o) { return verify_gluing_gorenstein(spec, o); });
}

}  // namespace

std::vector<TheoremInstance> theorem_instances() {
  const auto p14 = gluing({3, 5, 7}, {9, 11}, {3, 1, 0}, {2, 1});
  const auto p21 = gluing({3, 5, 7}, {9, 11}, {2, 3, 0}, {2, 1});
  const auto counter = gluing({5, 7, 11}, {25, 28}, {2, 1, 0}, {2, 0});
  const auto two_gen = gluing({3, 5}, {7, 12}, {1, 1}, {1, 1});
  const auto star = gluing({3, 5, 7}, {9, 11}, {0, 0, 4}, {2, 1});
  const auto non_cm_cone = gluing({7, 8}, {5, 12}, {3, 0}, {1, 1});

  std::vector<TheoremInstance> out;
  for (auto order : {BlockOrder::XFirst, BlockOrder::YFirst}) {
    const std::string suffix = order == BlockOrder::XFirst ? "" : ", y variables first";
    out.push_back(groebner_instance("<3,5,7> and <9,11>, p=21, q=29" + suffix, p21, RhoForm::Full, order, true));
    out.push_back(groebner_instance("<3,5,7> and <9,11>, p=14, q=29" + suffix, p14, RhoForm::Full, order, true));
    out.push_back(groebner_instance("<5,7,11> and <25,28>, p=17, q=50" + suffix, counter, RhoForm::Full, order, true));
    out.push_back(groebner_instance("<3,5> and <7,12>, p=8, q=19" + suffix, two_gen, RhoForm::Full, order, true));
  }
  out.push_back(groebner_instance("<3,5,7> and <9,11>, p=21, q=29, displayed binomial x_l^{b_l} - x0^e y^a", p21,
                                  RhoForm::LastOnly, BlockOrder::XFirst, true, true));

  out.push_back(acm_instance("<3,5,7> and <9,11>, p=14, q=29", p14, {87, 145, 203, 126, 154}, true));
  out.push_back(acm_instance("<3,5,7> and <9,11>, p=21, q=29", p21, {87, 145, 203, 189, 231}, true));
  out.push_back(acm_instance("<5,7,11> and <25,28>, p=17, q=50", counter, {250, 350, 550, 425, 476}, true));
  out.push_back(acm_instance("<3,5> and <7,12>, p=8, q=19", two_gen, {57, 95, 56, 96}, true));
  out.push_back(acm_instance("<12,13> and <3,11>, p=37, q=6", gluing({12, 13}, {3, 11}, {2, 1}, {2, 0}), {}, false));
  out.push_back(acm_instance("<11,13> and <8,11>, p=50, q=27", gluing({11, 13}, {8, 11}, {1, 3}, {2, 1}), {}, false));

  out.push_back(star_instance("<3,5,7> and <9,11>, p=28, q=29", star, {87, 145, 203, 252, 308}, true));
  out.push_back(star_instance("<3,5,7> and <9,11>, p=28, q=29, printed generators <87,145,203,189,231>", star,
                              {87, 145, 203, 189, 231}, true, true));
  out.push_back(star_instance("<7,8> and <5,12>, p=21, q=17", non_cm_cone, {105, 252, 119, 136}, true));
  out.push_back(star_instance("<5,7> and <2,13>, p=22, q=15, smallest generator p*n_1",
                              gluing({5, 7}, {2, 13}, {3, 1}, {1, 1}), {}, false));
  out.push_back(star_instance("<11,13> and <8,11>, p=50, q=27", gluing({11, 13}, {8, 11}, {1, 3}, {2, 1}), {}, false));

  out.push_back(gorenstein_instance("<3,5> and <7,12>, p=8, q=19", two_gen, true));
  out.push_back(gorenstein_instance("<12,13> and <3,11>, p=37, q=6", gluing({12, 13}, {3, 11}, {2, 1}, {2, 0}), false));
  out.push_back(gorenstein_instance("<11,13> and <8,11>, p=50, q=27", gluing({11, 13}, {8, 11}, {1, 3}, {2, 1}), false));
  out.push_back(gorenstein_instance("<4,7> and <2,3>, p=25, q=7", gluing({4, 7}, {2, 3}, {1, 3}, {2, 1}), false));
  out.push_back(gorenstein_instance("<2,3> and <2,3>, p=q=5", gluing({2, 3}, {2, 3}, {1, 1}, {1, 1}), false));

  out.push_back(extension_instance("matrix A, l=2, a=(6,9)", ExtensionSpec{matrix_a(), 2, {0, 0, 0, 0, 3}}, true));
  out.push_back(extension_instance("<3,5>, l=2, a=9",
                                   ExtensionSpec{AffineSemigroup::from_numerical(NumericalSemigroup({3, 5})), 2, {3, 0}},
                                   false));

  out.push_back(join_instance("<3,5,7> on the first axis, <2,3> on the second", on_axis({3, 5, 7}, 0), on_axis({2, 3}, 1)));
  out.push_back(join_instance("<6,7,8,9> on the first axis, <2,3> on the second", on_axis({6, 7, 8, 9}, 0),
                              on_axis({2, 3}, 1)));
  out.push_back(join_instance("<2,3> on the first axis, <3,5> on the second", on_axis({2, 3}, 0), on_axis({3, 5}, 1)));
  return out;
}

std::vector<TheoremInstance> theorem_instances(const std::string& theorem) {
  std::vector<TheoremInstance> out;
  for (auto& t : theorem_instances())
    if (t.theorem == theorem) out.push_back(std::move(t));
  return out;
}

std::vector<HypothesisProbe> hypothesis_probes() {
  const std::string nice = "generalized nice gluing: sum b > sum a";
  const std::string cond_a = "leading exponents of the left basis avoid b: lcm(b_i, alpha_i) != b_i";
  const std::string cond_b = "leading exponents of the right basis avoid a: lcm(a_j, alpha_j) != a_j";
  return {
      groebner_probe(nice, gluing({9, 13}, {2, 5}, {2, 1}, {1, 2})),
      groebner_probe(cond_a, gluing({5, 9, 12}, {5, 8}, {3, 0, 3}, {3, 1})),
      acm_probe(nice, gluing({7, 11}, {7, 10}, {2, 1}, {3, 3})),
      acm_probe(cond_a, gluing({6, 9, 13}, {3, 7}, {2, 1, 0}, {1, 1})),
      acm_probe("projective closure of the right factor is ACM", gluing({3, 4}, {3, 10, 14}, {1, 2}, {0, 1, 1})),
      star_probe("star gluing: sum a < sum b", gluing({5, 7}, {8, 13}, {1, 2}, {2, 3})),
      star_probe(cond_b, gluing({9, 10}, {5, 11}, {3, 0}, {0, 2})),
      star_probe("tangent cone of the left factor is CM", gluing({6, 7, 11}, {4, 5}, {3, 1, 0}, {1, 2})),
      star_probe("tangent cone of the right factor is CM", gluing({3, 5}, {4, 5, 11}, {3, 2}, {1, 1, 1})),
      gorenstein_probe(nice, gluing({3, 7}, {4, 13}, {1, 2}, {3, 1})),
      gorenstein_probe(cond_a, gluing({9, 11, 12}, {3, 8}, {2, 0, 3}, {1, 1})),
      gorenstein_probe("largest generator is p*n_k", gluing({4, 11}, {4, 7}, {3, 1}, {1, 2})),
      gorenstein_probe("projective closure of the left factor is Gorenstein", gluing({4, 5, 11}, {7, 8}, {1, 1, 2}, {0, 2})),
      gorenstein_probe("projective closure of the right factor is Gorenstein", gluing({3, 7}, {3, 4, 5}, {2, 2}, {0, 1, 1})),
  };
}

}  // namespace semiglue
