#include "movsurf/verify.hpp"

#include <json.hpp>

#include "movsurf/errors.hpp"
#include "movsurf/implicitize.hpp"
#include "movsurf/linalg.hpp"
#include "movsurf/random.hpp"
#include "movsurf/resultant.hpp"

namespace movsurf {

namespace {

struct IdentityInfo {
  Identity id;
  const char* name;
};

constexpr IdentityInfo kIdentities[] = {
    {Identity::ThmMt, "thm-mt"},       {Identity::LemmaMt, "lemma-mt"},
    {Identity::Conj61, "conj-61"},     {Identity::Conj62, "conj-62"},
    {Identity::ThmMth, "thm-mth"},     {Identity::RemarkPm, "remark-pm"},
    {Identity::DimFormula, "dim-formula"},
};

template <typename T>
int signed_match(const T& left, const T& right) {
  if (left == right) return 1;
  if (left == -right) return -1;
  return 0;
}

std::string sign_text(int sign) { return sign > 0 ? "+1" : sign < 0 ? "-1" : "none"; }

Triple first_three(const ParamSurface& s) { return {s.x(0), s.x(1), s.x(2)}; }

int thm_plane_exponent(int d) { return (d + 1) * d / 2; }
int thm_res_exponent(int d) { return (d + 1) * d * (d - 1) / 6; }

class Checker {
 public:
  Checker(Report& report, int trial) : report_(report), trial_(trial) {}

  void add(const std::string& name, const std::string& left, const std::string& right, int sign,
           bool pass) {
    report_.checks.push_back({trial_, name, report_.relation, left, right, sign, pass});
  }
  void rational(const std::string& name, const Rational& left, const Rational& right) {
    int sign = signed_match(left, right);
    add(name, to_string(left), to_string(right), sign, sign != 0);
  }
  void poly(const std::string& name, const SparsePoly& left, const SparsePoly& right) {
    int sign = signed_match(left, right);
    add(name, left.to_string(), right.to_string(), sign, sign != 0);
  }

 private:
  Report& report_;
  int trial_;
};

std::string relation_for(Identity id, const Shape& shape, int d) {
  bool tri = shape.patch == Patch::Triangular;
  std::string ms = tri ? "|MS^" + std::to_string(d) + "_I|" : "|MS^" + std::to_string(d) + "|";
  std::string mt = tri ? "|MT^" + std::to_string(d) + "_I|" : "|MT^" + std::to_string(d) + "|";
  std::string mp = tri ? "|MP_I|" : "|MP|";
  std::string res = tri ? "Res_n" : "Res";
  switch (id) {
    case Identity::ThmMt:
      return ms + " = +/-" + mp + "^" + std::to_string(thm_plane_exponent(d)) + " " + res + "^" +
             std::to_string(thm_res_exponent(d));
    case Identity::LemmaMt:
      return mt + " = +/-" + mp + "^" + std::to_string(d) + " " + res + "^" + std::to_string(d * (d - 1) / 2);
    case Identity::Conj61:
      return "|MS^2| = +/-|MP|^3 Res";
    case Identity::Conj62:
      return "|MS^2_I| = +/-|MP_I|^3 Res_n";
    case Identity::ThmMth:
      return std::string(tri ? "|Ttilde| = +/-|[M T, M' T']|" : "|Ttilde| = +/-|M T|") + "; " + res +
             " * |M T| = +/-P^h";
    case Identity::RemarkPm:
      return "m1_I = +/-" + res + "^" + std::to_string(d - 1) + " m0_I with one signed value for every I";
    case Identity::DimFormula:
      return tri ? "nullity(MQ^d) = n(d+1)d(dn+d+5-n)/12" : "nullity(MQ^d) = (d+1)d(d-1)/6 mn";
  }
  return {};
}

bool generic_instance(const ParamSurface& s) {
  if (resultant(first_three(s), s.shape()) == 0) return false;
  if (s.patch() == Patch::Tensor) return det(build_MP(s)) != 0;
  try {
    choose_index_set_I(s);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) return false;
    throw;
  }
}

void require_patch(Identity id, const Shape& shape) {
  if (id == Identity::Conj61 && shape.patch != Patch::Tensor) {
    throw Error(ErrorCode::InvalidArgument, "conj-61 concerns tensor surfaces");
  }
  if (id == Identity::Conj62 && shape.patch != Patch::Triangular) {
    throw Error(ErrorCode::InvalidArgument, "conj-62 concerns triangular surfaces");
  }
}

int effective_d(Identity id, int d) {
  if (id == Identity::Conj61 || id == Identity::Conj62 || id == Identity::ThmMth) return 2;
  return d;
}

// Placement tallies for the triangular determinant identity.
struct PlacementTally {
  int tensor_like = 0;  // exponents placed as in the tensor case
  int printed = 0;
  int total = 0;
};

void run_checks(Report& report, const ParamSurface& s, Identity id, int d, int trial,
                std::optional<IndexSetI> index_set, PlacementTally& tally) {
  Checker check(report, trial);
  TrialRecord record{trial, s.describe(), std::nullopt};
  bool tri = s.patch() == Patch::Triangular;
  bool needs_i = tri && id != Identity::RemarkPm && id != Identity::DimFormula && id != Identity::ThmMth;
  if (needs_i && !index_set) index_set = choose_index_set_I(s);
  if (index_set && needs_i) record.index_set = index_set->to_string();
  report.trials.push_back(record);

  auto res = [&] { return resultant(first_three(s), s.shape()); };
  auto mp_det = [&](const std::optional<IndexSetI>& i) {
    return i ? det(build_MP_I(s, *i)) : det(build_MP(s));
  };

  switch (id) {
    case Identity::ThmMt: {
      Rational r = res(), mp = mp_det(index_set);
      Rational right = pow(mp, thm_plane_exponent(d)) * pow(r, thm_res_exponent(d));
      Rational left = det(build_MSd(s, d, index_set));
      check.rational("thm-mt", left, right);
      if (tri) {
        ++tally.total;
        tally.tensor_like += signed_match(left, right) != 0;
        Rational printed = pow(mp, thm_res_exponent(d)) * pow(r, thm_plane_exponent(d));
        tally.printed += signed_match(left, printed) != 0;
      }
      break;
    }
    case Identity::LemmaMt: {
      Rational r = res(), mp = mp_det(index_set);
      Rational right = pow(mp, static_cast<unsigned>(d)) * pow(r, static_cast<unsigned>(d * (d - 1) / 2));
      check.rational("lemma-mt", det(build_MTd(s, d, index_set)), right);
      break;
    }
    case Identity::Conj61: {
      Rational mp = mp_det({});
      check.rational("conj-61", det(build_MSd(s, 2)), pow(mp, 3) * res());
      break;
    }
    case Identity::Conj62: {
      Rational r = res();
      std::vector<IndexSetI> sets;
      if (s.n() == 1) {
        for (const auto& i : all_index_sets(1)) {
          if (det(build_MP_I(s, i)) != 0) sets.push_back(i);
        }
      } else {
        sets.push_back(*index_set);
      }
      for (const auto& i : sets) {
        Rational mp = det(build_MP_I(s, i));
        Rational left = det(build_MSd(s, 2, i));
        check.rational("conj-62 I=" + i.to_string(), left, pow(mp, 3) * r);
        ++tally.total;
        tally.tensor_like += signed_match<Rational>(left, pow(mp, 3) * r) != 0;
        tally.printed += signed_match<Rational>(left, mp * pow(r, 3)) != 0;
      }
      break;
    }
    case Identity::ThmMth: {
      KernelTableau k = kernel_tableau(s);
      if (k.index_set) report.trials.back().index_set = k.index_set->to_string();
      int degree = tableau_degree(s.shape());
      SparsePoly tt = poly_det(build_Ttilde(k), degree);
      SparsePoly mt = poly_det(build_product(k), degree);
      check.poly("formal", tt, mt);
      MainIdentityCheck main = check_main_identity(s, k);
      check.add("main", main.lhs.to_string(), main.rhs.to_string(), main.sign, main.holds());
      break;
    }
    case Identity::RemarkPm: {
      if (d < 2) throw Error(ErrorCode::InvalidArgument, "remark-pm needs d >= 2");
      Rational r = pow(res(), static_cast<unsigned>(d - 1));
      KoszulPair kp = koszul_matrices(first_three(s), d, s.shape());
      auto sets = valid_index_sets(kp, 3);
      if (sets.size() < 3) {
        check.add("index-sets", std::to_string(sets.size()), "3", 0, false);
      }
      std::optional<Rational> first_value;
      for (std::size_t k = 0; k < sets.size(); ++k) {
        ComplexMinor cm = complex_minor(kp, sets[k]);
        std::string tag = "I#" + std::to_string(k + 1);
        check.rational("pm " + tag, cm.m1, r * cm.m0);
        Rational value = cm.sign * cm.m1 / cm.m0;
        if (!first_value) first_value = value;
        bool same = value == *first_value;
        check.add("signed-value " + tag, to_string(value), to_string(*first_value), same ? 1 : 0, same);
      }
      break;
    }
    case Identity::DimFormula: {
      ExactMatrix mq = build_MQd(s, d);
      std::size_t nullity = mq.cols() - rank(mq);
      int n = s.n(), m = s.m();
      int expected = tri ? n * (d + 1) * d * (d * n + d + 5 - n) / 12 : (d + 1) * d * (d - 1) / 6 * m * n;
      bool ok = nullity == static_cast<std::size_t>(expected);
      check.add("dim-formula", std::to_string(nullity), std::to_string(expected), ok ? 1 : 0, ok);
      break;
    }
  }
}

void add_placement_note(Report& report, const PlacementTally& tally) {
  if (tally.total == 0) return;
  report.notes.push_back("exponent placement: |MP_I|^((d+1)d/2) Res_n^((d+1)d(d-1)/6) holds " +
                         std::to_string(tally.tensor_like) + "/" + std::to_string(tally.total) +
                         "; |MP_I|^((d+1)d(d-1)/6) Res_n^((d+1)d/2) holds " +
                         std::to_string(tally.printed) + "/" + std::to_string(tally.total));
}

std::string shape_flags(const Shape& shape) {
  if (shape.patch == Patch::Tensor) {
    return "--case tensor --m " + std::to_string(shape.m) + " --n " + std::to_string(shape.n);
  }
  return "--case triangular --n " + std::to_string(shape.n);
}

}  // namespace

const char* identity_name(Identity id) noexcept {
  for (const auto& info : kIdentities) {
    if (info.id == id) return info.name;
  }
  return "unknown";
}

Identity parse_identity(std::string_view name) {
  for (const auto& info : kIdentities) {
    if (name == info.name) return info.id;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown identity '" + std::string(name) + "'");
}

bool Report::passed() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int Report::pass_count() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::string Report::to_text() const {
  std::string out;
  out += "command: " + command + "\n";
  out += "identity: " + identity + "\n";
  out += "relation: " + relation + "\n";
  std::size_t c = 0;
  for (const auto& t : trials) {
    out += "trial " + std::to_string(t.trial) + ": " + t.instance + "\n";
    if (t.index_set) out += "  I = " + *t.index_set + "\n";
    for (; c < checks.size() && checks[c].trial == t.trial; ++c) {
      const auto& ch = checks[c];
      out += std::string("  ") + (ch.pass ? "PASS " : "FAIL ") + ch.name + ": left=" + ch.left +
             " right=" + ch.right + " sign=" + sign_text(ch.sign) + "\n";
    }
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  out += "summary: " + std::to_string(pass_count()) + "/" + std::to_string(checks.size()) +
         " checks passed; resamples: " + std::to_string(resamples) + "\n";
  out += std::string("result: ") + (passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["identity"] = identity;
  j["relation"] = relation;
  j["trials"] = nlohmann::ordered_json::array();
  for (const auto& t : trials) {
    nlohmann::ordered_json tj;
    tj["trial"] = t.trial;
    tj["instance"] = t.instance;
    if (t.index_set) tj["index_set"] = *t.index_set;
    j["trials"].push_back(tj);
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& ch : checks) {
    j["checks"].push_back({{"trial", ch.trial},
                           {"name", ch.name},
                           {"relation", ch.relation},
                           {"left", ch.left},
                           {"right", ch.right},
                           {"sign", ch.sign},
                           {"pass", ch.pass}});
  }
  j["notes"] = notes;
  j["resamples"] = resamples;
  j["passed"] = pass_count();
  j["total"] = checks.size();
  j["result"] = passed() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

Report run_suite(const SuiteParams& params) {
  if (params.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  if (params.d < 1) throw Error(ErrorCode::InvalidArgument, "d must be at least 1");
  if (params.shape.n < 1 || params.shape.m < 1) throw Error(ErrorCode::Degree, "degrees must be positive");
  require_patch(params.identity, params.shape);
  int d = effective_d(params.identity, params.d);
  if (params.identity == Identity::RemarkPm && d < 2) {
    throw Error(ErrorCode::InvalidArgument, "remark-pm needs d >= 2");
  }

  Report report;
  report.identity = identity_name(params.identity);
  report.relation = relation_for(params.identity, params.shape, d);
  report.command = std::string("verify --identity ") + report.identity + " " + shape_flags(params.shape) +
                   " --d " + std::to_string(d) + " --trials " + std::to_string(params.trials) +
                   " --seed " + std::to_string(params.seed);

  InstanceRng rng(params.seed);
  PlacementTally tally;
  for (int trial = 1; trial <= params.trials; ++trial) {
    std::optional<ParamSurface> s;
    while (true) {
      ParamSurface candidate = rng.surface(params.shape);
      if (generic_instance(candidate)) {
        s = candidate;
        break;
      }
      if (++report.resamples > 1000 * params.trials) {
        throw Error(ErrorCode::Internal, "no generic instance found in the random stream");
      }
    }
    run_checks(report, *s, params.identity, d, trial, std::nullopt, tally);
  }
  add_placement_note(report, tally);
  return report;
}

Report verify_surface(const ParamSurface& s, Identity identity, int d, std::optional<IndexSetI> index_set) {
  require_patch(identity, s.shape());
  d = effective_d(identity, d);
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be at least 1");
  Report report;
  report.identity = identity_name(identity);
  report.relation = relation_for(identity, s.shape(), d);
  report.command = std::string("verify --identity ") + report.identity + " --input <surface> --d " +
                   std::to_string(d);
  PlacementTally tally;
  run_checks(report, s, identity, d, 1, index_set, tally);
  add_placement_note(report, tally);
  return report;
}

}  // namespace movsurf
