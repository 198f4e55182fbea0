#include "waringlab/json_io.hpp"

#include <stdexcept>

namespace waringlab {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw std::invalid_argument("expected rational as \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

}  // namespace

Json form_to_json(const Form& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms()) terms.push_back({{"exp", a}, {"coef", c.str()}});
  return {{"n", f.n()}, {"d", f.d()}, {"terms", std::move(terms)}};
}

Form form_from_json(const Json& j) {
  Form f(j.at("n").get<int>(), j.at("d").get<int>());
  for (const auto& term : j.at("terms")) {
    const auto exp = term.at("exp").get<Exponents>();
    f.set_coeff(exp, rat_from_json(term.at("coef")));
  }
  return f;
}

Json pointset_to_json(const PointSet& a) {
  Json pts = Json::array();
  for (const auto& p : a.points()) {
    Json coords = Json::array();
    for (Eigen::Index i = 0; i < p.coords().size(); ++i) coords.push_back(p.coords()(i).str());
    pts.push_back(std::move(coords));
  }
  return {{"n", a.n()}, {"points", std::move(pts)}};
}

PointSet pointset_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<ProjPoint> pts;
  for (const auto& coords : j.at("points")) {
    if (static_cast<int>(coords.size()) != n + 1)
      throw std::invalid_argument("point has wrong coordinate count");
    RatVector v(n + 1);
    for (Eigen::Index i = 0; i <= n; ++i) v(i) = rat_from_json(coords.at(static_cast<std::size_t>(i)));
    pts.emplace_back(std::move(v));
  }
  return PointSet(n, std::move(pts));
}

Json decomposition_to_json(const Decomposition& dec) {
  Json coeffs = Json::array();
  for (const auto& c : dec.coeffs) coeffs.push_back(c.str());
  return {{"points", pointset_to_json(dec.pts)}, {"coeffs", std::move(coeffs)}, {"d", dec.d}};
}

Decomposition decomposition_from_json(const Json& j) {
  PointSet pts = pointset_from_json(j.at("points"));
  std::vector<Rat> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_json(c));
  return Decomposition(std::move(pts), std::move(coeffs), j.at("d").get<int>());
}

Json witness_to_json(const Witness& w) {
  Json decomps = Json::array();
  for (const auto& dec : w.decomps) decomps.push_back(decomposition_to_json(dec));
  return {{"family", w.family}, {"seed", w.seed},           {"n", w.n},
          {"d", w.d},           {"form", form_to_json(w.form)}, {"decomps", std::move(decomps)}};
}

Witness witness_from_json(const Json& j) {
  Witness w{form_from_json(j.at("form")), {}, j.at("family").get<std::string>(),
            j.at("seed").get<std::uint64_t>(), j.at("n").get<int>(), j.at("d").get<int>()};
  for (const auto& dec : j.at("decomps")) w.decomps.push_back(decomposition_from_json(dec));
  return w;
}

Json hvector_to_json(const HVector& hv) { return {{"values", hv.values}, {"tau", hv.tau}}; }

Json pair_report_to_json(const PairReport& rep) {
  return {{"len_a", rep.len_a},
          {"len_b", rep.len_b},
          {"intersection", rep.intersection},
          {"diff", pointset_to_json(rep.diff)},
          {"diff_collinear", rep.diff_collinear},
          {"diff_two_lines", rep.diff_two_lines},
          {"diff_two_planes", rep.diff_two_planes},
          {"kruskal_a", rep.kruskal_a},
          {"kruskal_b", rep.kruskal_b}};
}

Json numdecomp_to_json(const NumDecomp& nd) {
  Json vectors = Json::array();
  for (const auto& v : nd.vectors) {
    Json coords = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) coords.push_back({v(i).real(), v(i).imag()});
    vectors.push_back(std::move(coords));
  }
  return {{"vectors", std::move(vectors)}, {"residual", nd.residual}};
}

Json search_report_to_json(const SearchReport& rep) {
  Json classes = Json::array();
  for (const auto& nd : rep.classes) classes.push_back(numdecomp_to_json(nd));
  return {{"classes", std::move(classes)},
          {"class_counts", rep.class_counts},
          {"converged", rep.converged},
          {"restarts", rep.restarts},
          {"rate", rep.restarts > 0 ? static_cast<double>(rep.converged) / rep.restarts : 0.0}};
}

}  // namespace waringlab
