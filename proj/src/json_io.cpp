#include "dynwg/json_io.hpp"

namespace dynwg {

namespace {

int slot_of(const std::string& name) {
  if (name == "h") return kHbar;
  if (name.size() >= 2 && name[0] == 'x') {
    const int i = std::stoi(name.substr(1));
    if (i >= 1 && i <= kMaxXVars) return i - 1;
  }
  throw InvalidArgument("unknown variable '" + name + "'");
}

json scalars_to_json(const QVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(format_scalar(q));
  return a;
}

}  // namespace

json ratfun_to_json(const RatFun& f) {
  json j;
  j["text"] = f.str();
  json num = json::array();
  for (const auto& [m, c] : f.numerator().terms()) {
    json powers = json::object();
    for (int s = 0; s < kNumVars; ++s)
      if (m.exp[s]) powers[variable_name(s)] = m.exp[s];
    num.push_back({{"coeff", format_scalar(c)}, {"powers", powers}});
  }
  j["num"] = num;
  json den = json::array();
  for (const auto& [form, mult] : f.denominator()) {
    QVector xs;
    for (int i = 1; i <= form.form().x_extent(); ++i) xs.push_back(form.form().x_coeff(i));
    den.push_back({{"form", {{"x", scalars_to_json(xs)}, {"h", format_scalar(form.form().h_coeff())}}}, {"mult", mult}});
  }
  j["den"] = den;
  return j;
}

RatFun ratfun_from_json(const json& j) {
  Polynomial num;
  for (const auto& t : j.at("num")) {
    Monomial m;
    for (const auto& [name, e] : t.at("powers").items()) m.exp[slot_of(name)] = e.get<std::uint16_t>();
    num = num + Polynomial::monomial(m, parse_scalar(t.at("coeff").get<std::string>()));
  }
  std::vector<LinearForm> forms;
  for (const auto& d : j.at("den")) {
    const auto& xs = d.at("form").at("x");
    LinearForm f = LinearForm::hbar(parse_scalar(d.at("form").at("h").get<std::string>()));
    for (std::size_t i = 0; i < xs.size(); ++i)
      f = f + LinearForm::x(static_cast<int>(i) + 1, parse_scalar(xs[i].get<std::string>()));
    const int mult = d.at("mult").get<int>();
    if (mult < 1) throw InvalidArgument("denominator multiplicity must be positive");
    for (int k = 0; k < mult; ++k) forms.push_back(f);
  }
  return RatFun::quotient(std::move(num), forms);
}

json weight_to_json(const Weight& w) { return json(w.coords); }

Weight weight_from_json(const json& j) { return Weight(j.get<std::vector<int>>()); }

json block_to_json(const OperatorBlock& b) {
  json j;
  j["algebra"] = b.type.name();
  j["hw"] = weight_to_json(b.hw);
  j["mu"] = weight_to_json(b.source);
  j["word"] = b.word.letters;
  j["target"] = weight_to_json(b.target);
  j["basis_labels"] = {{"source", b.source_labels}, {"target", b.target_labels}};
  json m = json::array();
  for (const auto& row : b.matrix) {
    json r = json::array();
    for (const auto& e : row) r.push_back(ratfun_to_json(e));
    m.push_back(r);
  }
  j["matrix"] = m;
  return j;
}

json rank1_report_to_json(const Rank1Report& r) {
  return {{"lambda", r.lambda},
          {"mu", r.mu},
          {"geometric", ratfun_to_json(r.geometric)},
          {"dynamical_shifted", ratfun_to_json(r.dynamical_shifted)},
          {"equal", r.equal}};
}

json levi_report_to_json(const LeviReport& r) {
  json strings = json::array();
  for (const auto& s : r.strings)
    strings.push_back({{"m", s.m},
                       {"k", s.k},
                       {"geometric", ratfun_to_json(s.geometric)},
                       {"dynamical_shifted", ratfun_to_json(s.dynamical_shifted)},
                       {"equal", s.equal}});
  return {{"algebra", r.type.name()}, {"hw", weight_to_json(r.hw)}, {"mu", weight_to_json(r.mu)},
          {"index", r.index},         {"strings", strings},          {"block_equal", r.block_equal},
          {"equal", r.equal}};
}

json irrep_to_json(const Irrep& v) {
  json j;
  j["version"] = IrrepCache::kFormatVersion;
  j["type"] = v.type().name();
  j["hw"] = weight_to_json(v.highest_weight());
  j["dim"] = v.dim();
  json ws = json::array();
  for (const auto& s : v.spaces())
    ws.push_back({{"weight", weight_to_json(s.weight)}, {"offset", s.offset}, {"dim", s.dim}, {"monomials", s.monomials}});
  j["weights"] = ws;
  auto triplets = [](const SparseMatrix& m) {
    json a = json::array();
    for (const auto& [r, c, q] : m.triplets()) a.push_back(json::array({r, c, format_scalar(q)}));
    return a;
  };
  json e = json::array(), f = json::array();
  for (int i = 1; i <= v.rank(); ++i) {
    e.push_back(triplets(v.e(i)));
    f.push_back(triplets(v.f(i)));
  }
  j["generators"] = {{"E", e}, {"F", f}};
  return j;
}

Irrep irrep_from_json(const json& j) {
  if (j.at("version").get<int>() != IrrepCache::kFormatVersion)
    throw InvalidArgument("unsupported irrep cache version");
  const LieType t = LieType::parse(j.at("type").get<std::string>());
  const Weight hw = weight_from_json(j.at("hw"));
  const int dim = j.at("dim").get<int>();
  std::vector<WeightSpace> spaces;
  for (const auto& s : j.at("weights"))
    spaces.push_back(WeightSpace{weight_from_json(s.at("weight")), s.at("offset").get<int>(), s.at("dim").get<int>(),
                                 s.at("monomials").get<std::vector<std::vector<int>>>()});
  auto load = [&](const json& a) {
    SparseMatrix m(dim, dim);
    for (const auto& t3 : a) m.add(t3.at(0).get<int>(), t3.at(1).get<int>(), parse_scalar(t3.at(2).get<std::string>()));
    return m;
  };
  std::vector<SparseMatrix> e, f;
  for (const auto& a : j.at("generators").at("E")) e.push_back(load(a));
  for (const auto& a : j.at("generators").at("F")) f.push_back(load(a));
  return Irrep(t, hw, std::move(spaces), std::move(e), std::move(f));
}

}  // namespace dynwg
