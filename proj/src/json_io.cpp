#include "seqspace/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace seqspace {

namespace {

[[noreturn]] void bad_field(const std::string& what) {
  throw std::invalid_argument("descriptor JSON: " + what);
}

double number_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) bad_field(std::string("missing number '") + key + "'");
  return j.at(key).get<double>();
}

std::string string_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) bad_field(std::string("missing string '") + key + "'");
  return j.at(key).get<std::string>();
}

std::vector<double> numbers_at(const Json& j, const char* key) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) out.push_back(v.get<double>());
  return out;
}

}  // namespace

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Json orlicz_to_json(const OrliczFunction& f) {
  Json j;
  switch (f.family()) {
    case OrliczFunction::Family::power:
      j["family"] = "power";
      j["p"] = f.param_p();
      break;
    case OrliczFunction::Family::fpa:
      j["family"] = "fpa";
      j["p"] = f.param_p();
      j["a"] = f.param_a();
      break;
    case OrliczFunction::Family::dual_g:
      j["family"] = "dualG";
      break;
    case OrliczFunction::Family::flow:
      j["family"] = "flow";
      j["base"] = orlicz_to_json(f.flow_base());
      j["s"] = f.flow_scale();
      break;
    case OrliczFunction::Family::table: {
      j["family"] = "table";
      Json points = Json::array();
      for (const auto& p : f.table_points()) points.push_back({p[0], p[1]});
      j["points"] = points;
      break;
    }
  }
  return j;
}

OrliczFunction orlicz_from_json(const Json& j) {
  const std::string family = string_at(j, "family");
  if (family == "power") return OrliczFunction::power(number_at(j, "p"));
  if (family == "fpa") return OrliczFunction::fpa(number_at(j, "p"), number_at(j, "a"));
  if (family == "dualG") return OrliczFunction::dual_g();
  if (family == "flow")
    return flow(orlicz_from_json(j.at("base")), number_at(j, "s"));
  if (family == "table") {
    std::vector<std::array<double, 2>> points;
    for (const auto& p : j.at("points")) points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return OrliczFunction::table(std::move(points));
  }
  bad_field("unknown Orlicz family '" + family + "'");
}

namespace {

Json tail_to_json(const ExponentTail& tail) {
  Json j;
  if (const auto* c = std::get_if<ConstantTail>(&tail)) {
    j["kind"] = "constant";
    j["p"] = c->p;
  } else if (const auto* c = std::get_if<ConvergentTail>(&tail)) {
    j["kind"] = "convergent";
    j["p"] = c->p;
    j["rate"] = c->rate == RateKind::one_over_log ? "one_over_log" : "one_over_sqrt_log";
    j["c"] = c->c;
  } else if (const auto* d = std::get_if<DivergentTail>(&tail)) {
    j["kind"] = "divergent";
    switch (d->kind) {
      case GrowthKind::log2: j["form"] = "log2"; break;
      case GrowthKind::log_e: j["form"] = "ln"; break;
      case GrowthKind::log_log: j["form"] = "loglog"; break;
      case GrowthKind::sqrt_n: j["form"] = "sqrt"; break;
      case GrowthKind::linear: j["form"] = "linear"; break;
    }
    j["scale"] = d->scale;
    j["shift"] = d->shift;
    j["offset"] = d->offset;
    if (d->floor) j["floor"] = *d->floor;
  } else if (const auto* o = std::get_if<OscillatingTail>(&tail)) {
    j["kind"] = "oscillating";
    j["p1"] = o->p1;
    j["p2"] = o->p2;
    j["period"] = o->period;
  } else if (const auto* c = std::get_if<CountsTail>(&tail)) {
    j["kind"] = "counts";
    j["counts"] = counts_to_json(c->counts);
  } else if (const auto* c = std::get_if<ConjugateTail>(&tail)) {
    j["kind"] = "conjugate";
    j["base"] = exponents_to_json(*c->base);
  } else {
    j["kind"] = "unspecified";
  }
  return j;
}

ExponentTail tail_from_json(const Json& j) {
  const std::string kind = string_at(j, "kind");
  if (kind == "constant") return ConstantTail{number_at(j, "p")};
  if (kind == "convergent") {
    const std::string rate = string_at(j, "rate");
    RateKind rk;
    if (rate == "one_over_log")
      rk = RateKind::one_over_log;
    else if (rate == "one_over_sqrt_log")
      rk = RateKind::one_over_sqrt_log;
    else
      bad_field("unknown rate '" + rate + "'");
    return ConvergentTail{number_at(j, "p"), rk, number_at(j, "c")};
  }
  if (kind == "divergent") {
    const std::string form = string_at(j, "form");
    DivergentTail d{};
    if (form == "log2")
      d.kind = GrowthKind::log2;
    else if (form == "ln")
      d.kind = GrowthKind::log_e;
    else if (form == "loglog")
      d.kind = GrowthKind::log_log;
    else if (form == "sqrt")
      d.kind = GrowthKind::sqrt_n;
    else if (form == "linear")
      d.kind = GrowthKind::linear;
    else
      bad_field("unknown growth form '" + form + "'");
    if (j.contains("scale")) d.scale = number_at(j, "scale");
    if (j.contains("shift")) d.shift = number_at(j, "shift");
    if (j.contains("offset")) d.offset = number_at(j, "offset");
    if (j.contains("floor")) d.floor = number_at(j, "floor");
    return d;
  }
  if (kind == "oscillating") {
    OscillatingTail o{number_at(j, "p1"), number_at(j, "p2"), 2};
    if (j.contains("period")) o.period = j.at("period").get<std::size_t>();
    return o;
  }
  if (kind == "counts") return CountsTail{counts_from_json(j.at("counts"))};
  if (kind == "conjugate") {
    return ConjugateTail{std::make_shared<ExponentSequence>(exponents_from_json(j.at("base")))};
  }
  if (kind == "unspecified") return UnspecifiedTail{};
  bad_field("unknown tail kind '" + kind + "'");
}

}  // namespace

Json exponents_to_json(const ExponentSequence& e) {
  Json j;
  j["prefix"] = e.prefix();
  j["tail"] = tail_to_json(e.tail());
  return j;
}

ExponentSequence exponents_from_json(const Json& j) {
  std::vector<double> prefix = numbers_at(j, "prefix");
  if (!j.contains("tail")) return ExponentSequence(std::move(prefix), UnspecifiedTail{});
  return ExponentSequence(std::move(prefix), tail_from_json(j.at("tail")));
}

Json scales_to_json(const ScaleSequence& s) {
  Json j;
  j["prefix"] = s.prefix();
  switch (s.form()) {
    case ScaleSequence::Form::exp_minus_n:
      j["form"] = "exp(-n)";
      break;
    case ScaleSequence::Form::constant:
      j["form"] = "constant:" + format_g12(s.constant_value());
      break;
    case ScaleSequence::Form::none:
      j["form"] = nullptr;
      break;
  }
  return j;
}

ScaleSequence scales_from_json(const Json& j) {
  std::vector<double> prefix = numbers_at(j, "prefix");
  if (!j.contains("form") || j.at("form").is_null())
    return ScaleSequence(std::move(prefix));
  const std::string form = string_at(j, "form");
  if (form == "exp(-n)")
    return ScaleSequence(std::move(prefix), ScaleSequence::Form::exp_minus_n);
  if (form.rfind("constant:", 0) == 0)
    return ScaleSequence(std::move(prefix), ScaleSequence::Form::constant,
                         std::stod(form.substr(9)));
  bad_field("unknown scale form '" + form + "'");
}

Json weight_to_json(const Weight& w) {
  Json j;
  j["prefix"] = w.prefix();
  switch (w.form()) {
    case Weight::Form::custom: j["form"] = "custom"; break;
    case Weight::Form::constant: j["form"] = "const"; break;
    case Weight::Form::one_over_n: j["form"] = "one_over_n"; break;
    case Weight::Form::pow_diff: j["form"] = "pow_diff:" + format_g12(w.pow_diff_p()); break;
  }
  return j;
}

Weight weight_from_json(const Json& j) {
  std::vector<double> prefix = numbers_at(j, "prefix");
  const std::string form = j.contains("form") ? string_at(j, "form") : "custom";
  if (form == "custom") return Weight::from_values(std::move(prefix));
  if (form == "const") return Weight::with_prefix(std::move(prefix), Weight::Form::constant);
  if (form == "one_over_n")
    return Weight::with_prefix(std::move(prefix), Weight::Form::one_over_n);
  if (form.rfind("pow_diff:", 0) == 0)
    return Weight::with_prefix(std::move(prefix), Weight::Form::pow_diff,
                               std::stod(form.substr(9)));
  bad_field("unknown weight form '" + form + "'");
}

Json space_to_json(const SpaceDescriptor& s) {
  Json j;
  switch (s.kind()) {
    case SpaceDescriptor::Kind::nakano:
      j["kind"] = "nakano";
      j["exponents"] = exponents_to_json(s.exponents());
      break;
    case SpaceDescriptor::Kind::orlicz:
      j["kind"] = "orlicz";
      j["function"] = orlicz_to_json(s.function());
      break;
    case SpaceDescriptor::Kind::musielak_flow:
      j["kind"] = "flow";
      j["base"] = orlicz_to_json(s.function());
      j["scales"] = scales_to_json(s.scales());
      break;
    case SpaceDescriptor::Kind::marcinkiewicz:
      j["kind"] = "marcinkiewicz";
      j["weight"] = weight_to_json(s.weight());
      break;
    case SpaceDescriptor::Kind::lorentz_d1:
      j["kind"] = "lorentz_d1";
      j["weight"] = weight_to_json(s.weight());
      break;
    case SpaceDescriptor::Kind::weak_lorentz:
      j["kind"] = "weak_lorentz";
      j["weight"] = weight_to_json(s.weight());
      break;
  }
  return j;
}

SpaceDescriptor space_from_json(const Json& j) {
  const std::string kind = string_at(j, "kind");
  if (kind == "nakano") return SpaceDescriptor::nakano(exponents_from_json(j.at("exponents")));
  if (kind == "orlicz") return SpaceDescriptor::orlicz(orlicz_from_json(j.at("function")));
  if (kind == "flow")
    return SpaceDescriptor::musielak_flow(orlicz_from_json(j.at("base")),
                                          scales_from_json(j.at("scales")));
  if (kind == "marcinkiewicz") return SpaceDescriptor::marcinkiewicz(weight_from_json(j.at("weight")));
  if (kind == "lorentz_d1") return SpaceDescriptor::lorentz_d1(weight_from_json(j.at("weight")));
  if (kind == "weak_lorentz") return SpaceDescriptor::weak_lorentz(weight_from_json(j.at("weight")));
  bad_field("unknown space kind '" + kind + "'");
}

Json vector_to_json(const FiniteVector& x) {
  Json entries = Json::array();
  for (const auto& e : x.entries()) entries.push_back({e.index, e.value});
  Json j;
  j["entries"] = entries;
  return j;
}

FiniteVector vector_from_json(const Json& j) {
  std::vector<VectorEntry> entries;
  for (const auto& e : j.at("entries"))
    entries.push_back({e.at(0).get<std::size_t>(), e.at(1).get<double>()});
  return FiniteVector(std::move(entries));
}

Json counts_to_json(const CountFunction& c) {
  Json j;
  switch (c.form()) {
    case CountFunction::Form::exp_decay: j["form"] = "exp_decay"; break;
    case CountFunction::Form::one_over_log: j["form"] = "one_over_log"; break;
    case CountFunction::Form::explicit_scales:
      j["form"] = "explicit";
      j["scales"] = c.scales();
      break;
  }
  return j;
}

CountFunction counts_from_json(const Json& j) {
  const std::string form = string_at(j, "form");
  if (form == "exp_decay") return CountFunction::exp_decay();
  if (form == "one_over_log") return CountFunction::one_over_log();
  if (form == "explicit") return CountFunction::from_scales(numbers_at(j, "scales"));
  bad_field("unknown count form '" + form + "'");
}

Json verdict_to_json(const CriterionVerdict& v) {
  Json evidence;
  for (const auto& [key, value] : v.evidence.numbers) evidence[key] = value;
  for (const auto& [key, value] : v.evidence.notes) evidence[key] = value;
  Json j;
  j["criterion"] = v.criterion;
  j["verdict"] = to_string(v.verdict);
  j["evidence"] = evidence;
  j["paper_basis"] = v.basis;
  return j;
}

Json classification_to_json(const NakanoClassification& c) {
  Json j;
  switch (c.identification) {
    case SpaceIdentification::lp: j["identification"] = "l_" + format_g12(c.p); break;
    case SpaceIdentification::c0: j["identification"] = "c_0"; break;
    case SpaceIdentification::not_identified: j["identification"] = "not_identified"; break;
    case SpaceIdentification::unknown: j["identification"] = "unknown"; break;
  }
  j["unit_basis_greedy"] = to_string(c.unit_basis_greedy);
  j["space_has_greedy_basis"] = to_string(c.space_has_greedy_basis);
  j["density"] = to_string(c.density);
  j["summary"] = c.summary;
  j["detail"] = verdict_to_json(c.detail);
  return j;
}

Json block_basis_to_json(const BlockBasis& b) {
  Json j;
  j["lengths"] = b.lengths;
  j["scales"] = b.scales;
  Json blocks = Json::array();
  for (const auto& block : b.blocks) blocks.push_back(vector_to_json(block));
  j["blocks"] = blocks;
  j["block_norms"] = b.block_norms;
  j["samples"] = b.samples;
  j["max_isometry_error"] = b.max_isometry_error;
  j["pass"] = b.pass;
  return j;
}

Json weight_properties_to_json(const WeightProperties& p) {
  Json j;
  j["doubling"] = p.doubling;
  j["regularity"] = p.regularity;
  j["submultiplicativity"] = p.submultiplicativity;
  j["nonincreasing"] = p.nonincreasing;
  return j;
}

Json democracy_to_json(const DemocracyTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r;
    r["N"] = row.n;
    r["phi_l"] = row.phi_l;
    r["phi_u"] = row.phi_u;
    r["ratio"] = row.ratio;
    r["method"] = row.method;
    if (row.phi_l_analytic) r["phi_l_analytic"] = *row.phi_l_analytic;
    if (row.phi_u_analytic) r["phi_u_analytic"] = *row.phi_u_analytic;
    rows.push_back(std::move(r));
  }
  Json j;
  j["rows"] = rows;
  j["max_ratio"] = t.max_ratio();
  return j;
}

std::string democracy_to_csv(const DemocracyTable& t) {
  std::string out = "N,phi_l,phi_u,ratio,method\n";
  for (const auto& row : t.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_g12(row.phi_l);
    out += ',';
    out += format_g12(row.phi_u);
    out += ',';
    out += format_g12(row.ratio);
    out += ',';
    out += row.method;
    out += '\n';
  }
  return out;
}

Json greedy_report_to_json(const GreedyReport& r) {
  Json j;
  j["N"] = r.n_terms;
  j["indices"] = r.selected;
  j["greedy"] = vector_to_json(r.greedy_part);
  j["residual"] = vector_to_json(r.residual);
  j["residual_norm"] = r.residual_norm;
  j["sigma"] = r.sigma;
  j["ratio"] = r.ratio;
  return j;
}

}  // namespace seqspace
