#include "subst/json_io.hpp"

namespace subst {

namespace {

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
    return Json(v.convert_to<int64_t>());
  return Json(v.str());
}

std::string rational_str(const Rational& r) { return r.str(); }

Json word_json(const Alphabet& alphabet, const Word& w) {
  return Json(render_word(alphabet, w));
}

}  // namespace

Json algebraic_json(const AlgebraicReal& x, int digits) {
  Json poly = Json::array();
  for (const BigInt& c : x.defining().coeffs()) poly.push_back(bigint_json(c));
  Rational scale = boost::multiprecision::abs(x.upper());
  if (scale < 1) scale = 1;
  AlgebraicReal tight = x.refined(scale / BigInt("1000000000000"));
  Json j;
  j["poly"] = poly;
  j["interval"] = {rational_str(tight.lower()), rational_str(tight.upper())};
  j["approx"] = x.decimal(digits);
  return j;
}

Json growth_report_json(const Substitution& s, const GrowthReport& r, int digits) {
  Json letters = Json::array();
  for (Letter a = 0; a < s.alphabet().size(); ++a) {
    Json entry;
    entry["letter"] = s.alphabet().token(a);
    entry["d"] = r.letters[a].d;
    entry["theta"] = algebraic_json(r.letters[a].theta, digits);
    letters.push_back(entry);
  }
  Json a_max = Json::array();
  for (Letter a : r.a_max) a_max.push_back(s.alphabet().token(a));
  Json c_estimates = Json::array();
  for (Letter a = 0; a < s.alphabet().size(); ++a) {
    Json entry;
    entry["letter"] = s.alphabet().token(a);
    entry["value"] = r.c_estimates[a].value;
    entry["error"] = r.c_estimates[a].error;
    entry["horizon"] = r.c_estimates[a].horizon;
    c_estimates.push_back(entry);
  }
  Json j;
  j["letters"] = letters;
  j["Theta"] = algebraic_json(r.theta, digits);
  j["D"] = r.jordan;
  j["A_max"] = a_max;
  j["c_estimates"] = c_estimates;
  return j;
}

Json decomposition_json(const Substitution& s, const ComponentDecomposition& d,
                        std::optional<int> condition_c_k, int digits) {
  Json parts = Json::array();
  for (const auto& part : d.parts) {
    Json tokens = Json::array();
    for (Letter a : part) tokens.push_back(s.alphabet().token(a));
    parts.push_back(tokens);
  }
  Json principal = Json::array();
  for (size_t i = d.q; i < d.parts.size(); ++i) principal.push_back((int)i);
  Json blocks = Json::array();
  for (size_t i = 0; i < d.parts.size(); ++i)
    blocks.push_back(d.zero[i] ? "zero" : "primitive");
  Json eigenvalues = Json::array();
  for (size_t i = 0; i < d.parts.size(); ++i) {
    if (d.zero[i])
      eigenvalues.push_back(nullptr);
    else
      eigenvalues.push_back(algebraic_json(spectral_radius(d.blocks[i]), digits));
  }
  Json j;
  j["p"] = d.p;
  j["q"] = d.q;
  j["l"] = (int)d.parts.size();
  j["parts"] = parts;
  j["principal"] = principal;
  j["blocks"] = blocks;
  j["block_eigenvalues"] = eigenvalues;
  if (condition_c_k) j["exponent_condition_c"] = *condition_c_k;
  return j;
}

Json goodness_json(const Substitution& s, const GoodnessVerdict& v, int digits) {
  Json j;
  j["good"] = v.good;
  j["p"] = v.p;
  j["Theta"] = algebraic_json(v.theta, digits);
  if (v.witness) {
    Json w;
    w["part"] = v.witness->part;
    w["rules"] = serialize(v.witness->restricted);
    w["eigenvalue"] = algebraic_json(v.witness->eigenvalue, digits);
    w["eigenvalue_root"] = algebraic_json(v.witness_theta, digits);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json periodicity_json(const Substitution& s, const PeriodicityCertificate& c) {
  Json j;
  switch (c.kind) {
    case PeriodicityKind::periodic: j["kind"] = "periodic"; break;
    case PeriodicityKind::ultimately_periodic: j["kind"] = "ultimately-periodic"; break;
    case PeriodicityKind::none_found: j["kind"] = "none-found"; break;
  }
  if (c.witness) {
    j["u"] = word_json(s.alphabet(), c.witness->preperiod);
    j["v"] = word_json(s.alphabet(), c.witness->period);
  } else {
    j["u"] = nullptr;
    j["v"] = nullptr;
  }
  j["verified"] = c.verified;
  return j;
}

Json return_words_json(const Substitution& s, const ReturnWordSet& r) {
  Json returns = Json::array();
  for (const Word& w : r.returns) returns.push_back(word_json(s.alphabet(), w));
  Json j;
  j["u"] = word_json(s.alphabet(), r.base);
  j["returns"] = returns;
  j["horizon"] = r.horizon;
  j["complete"] = r.complete;
  return j;
}

Json gap_json(const Substitution& s, const Word& target, size_t horizon, size_t gap) {
  Json j;
  j["word"] = word_json(s.alphabet(), target);
  j["horizon"] = horizon;
  j["max_gap"] = gap;
  return j;
}

Json starlike_json(const Substitution& s, const StarlikeDecomposition& d) {
  Json j;
  j["p"] = d.p;
  j["u"] = word_json(s.alphabet(), d.u);
  j["v"] = word_json(s.alphabet(), d.v);
  j["w"] = word_json(s.alphabet(), d.w);
  j["a"] = s.alphabet().token(d.a);
  j["gamma"] = d.gamma_estimate;
  j["gamma_error"] = d.gamma_error;
  return j;
}

Json density_witness_json(const DensityWitness& w) {
  Json j;
  j["n"] = w.n;
  j["m"] = w.m;
  j["achieved"] = w.achieved;
  j["target"] = w.target;
  j["eps"] = w.eps;
  return j;
}

Json intertwined_sidecar_json(const IntertwinedSystem& sys) {
  Json psi;
  for (Letter b = 0; b < sys.base.alphabet().size(); ++b)
    psi[sys.base.alphabet().token(b)] = word_json(sys.built.alphabet(), sys.psi.image(b));
  Json phi;
  for (Letter d = 0; d < sys.built.alphabet().size(); ++d)
    phi[sys.built.alphabet().token(d)] = sys.target.token(sys.phi.image(d)[0]);
  Json j;
  j["kind"] = "periodic-system";
  j["p"] = sys.p;
  j["period"] = word_json(sys.target, sys.period);
  j["base_rules"] = serialize(sys.base);
  j["psi"] = psi;
  j["phi"] = phi;
  j["seed"] = sys.built.alphabet().token(sys.built_seed);
  return j;
}

Json zeta_sidecar_json(const ZetaSystem& sys) {
  const Alphabet& g = sys.zeta.alphabet();
  Json rho, phi;
  for (Letter b = 0; b < g.size(); ++b) {
    rho[g.token(b)] = sys.f_alphabet.token(sys.rho.image(b)[0]);
    phi[g.token(b)] = sys.phi.target().token(sys.phi.image(b)[0]);
  }
  Json j;
  j["kind"] = "zeta-system";
  Json pre = Json::array();
  for (const auto& t : sys.preperiod) pre.push_back(t);
  j["preperiod"] = pre;
  j["tau_extended"] = serialize(sys.tau_ext);
  j["rho"] = rho;
  j["phi"] = phi;
  j["seed"] = g.token(sys.seed_block);
  return j;
}

Json block_sidecar_json(const BlockSystem& bs, const std::optional<Word>& indicator_word) {
  const Alphabet& g = bs.block_subst.alphabet();
  Json rho;
  for (Letter b = 0; b < g.size(); ++b)
    rho[g.token(b)] = bs.base.alphabet().token(bs.rho.image(b)[0]);
  Json j;
  j["kind"] = "block-system";
  j["n"] = bs.n;
  j["base_rules"] = serialize(bs.base);
  j["rho"] = rho;
  j["seed"] = g.token(bs.seed_block);
  if (indicator_word) {
    Morphism f = indicator_morphism(bs, *indicator_word);
    Json ind;
    for (Letter b = 0; b < g.size(); ++b)
      ind[g.token(b)] = f.image(b)[0] == 1 ? 1 : 0;
    j["indicator_word"] = word_json(bs.base.alphabet(), *indicator_word);
    j["indicator"] = ind;
  }
  return j;
}

}  // namespace subst
