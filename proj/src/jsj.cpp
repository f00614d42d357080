#include "orjsj/jsj.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include "orjsj/errors.hpp"
#include "orjsj/parse.hpp"

namespace orjsj {

namespace {

const char* const kNotOneEndedWarning =
    "not one-ended: the root is empty or primitive, so the group is a free product of cyclic "
    "groups and has no JSJ decomposition";
const char* const kNoAssumptionWarning = "unknown: hyperbolicity/RG not asserted";
const char* const kNotDerivedWarning =
    "unknown: torsion-free relator outside F(a,b)'; the characterisation is not established "
    "for this case";

// Whitehead route shared by detection and computation. With exclude_all the
// representative is dropped when conjugate to any power of [a, b]; otherwise
// only for [a, b]^{+-1}.
std::optional<HnnDecomposition> whitehead_route(const Root& r, bool exclude_all,
                                                const EngineOptions& options) {
  const OrbitSet orbit = shortest_orbit_set(cyclic_reduce(r.root).core, options.orbit_cap);
  auto rep = find_representative(orbit);
  if (!rep) return std::nullopt;
  if (auto k = commutator_power(rep->T)) {
    if (exclude_all || std::llabs(*k) == 1) return std::nullopt;
  }
  const auto s_len = cyclic_reduce(r.root).reduced.size();
  if (rep->T0.size() >= s_len) {
    throw std::logic_error("base relator " + rep->T0.plain() + " is not shorter than the root");
  }
  return HnnDecomposition{std::move(rep->T0), r.exponent, std::move(rep->T)};
}

std::string unsupported_reason(const Applicability& a) {
  return a.sums.in_derived_subgroup() ? kNoAssumptionWarning : kNotDerivedWarning;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::string case_name(Case c) {
  switch (c) {
    case Case::NotOneEnded: return "NotOneEnded";
    case Case::FuchsianCase: return "FuchsianCase";
    case Case::TheoremA: return "TheoremA";
    case Case::TheoremB: return "TheoremB";
    case Case::Unsupported: return "Unsupported";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::NonTrivial: return "nontrivial";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::string out_class_name(OutClass c) {
  switch (c) {
    case OutClass::Finite: return "finite";
    case OutClass::VirtuallyZ: return "virtually-Z";
    case OutClass::GL2Z: return "GL2(Z)";
  }
  return "?";
}

Applicability triage(const Word& R, Assumptions assumptions) {
  if (R.empty()) throw EmptyWord();
  Applicability a;
  Root r = max_root(R);
  a.root = std::move(r.root);
  a.exponent = r.exponent;
  a.sums = exponent_sums(R);
  if (is_primitive(a.root)) {
    a.kind = Case::NotOneEnded;
  } else if (a.exponent > 1) {
    auto k = commutator_power(a.root);
    a.kind = (k && std::llabs(*k) == 1) ? Case::FuchsianCase : Case::TheoremB;
  } else if (a.sums.in_derived_subgroup() && assumptions.any()) {
    a.kind = Case::TheoremA;
  } else {
    a.kind = Case::Unsupported;
  }
  return a;
}

Detection detect(const Word& R, Assumptions assumptions, const EngineOptions& options) {
  const Applicability a = triage(R, assumptions);
  Detection d;
  switch (a.kind) {
    case Case::FuchsianCase:
      d.verdict = Verdict::Trivial;
      break;
    case Case::NotOneEnded:
      d.warnings.emplace_back(kNotOneEndedWarning);
      break;
    case Case::Unsupported:
      d.warnings.push_back(unsupported_reason(a));
      break;
    case Case::TheoremA:
      d.verdict = classify(ft_polytope(R)) == PolytopeClass::Segment ? Verdict::NonTrivial
                                                                      : Verdict::Trivial;
      break;
    case Case::TheoremB:
      d.verdict = whitehead_route({a.root, a.exponent}, false, options) ? Verdict::NonTrivial
                                                                        : Verdict::Trivial;
      break;
  }
  return d;
}

JsjDecomposition compute(const Word& R, Assumptions assumptions, const EngineOptions& options) {
  const Applicability a = triage(R, assumptions);
  switch (a.kind) {
    case Case::FuchsianCase:
      return {};
    case Case::NotOneEnded:
      throw JsjUndefined(kNotOneEndedWarning);
    case Case::Unsupported:
      throw JsjUndefined(unsupported_reason(a));
    case Case::TheoremA:
      return {whitehead_route({a.root, a.exponent}, true, options)};
    case Case::TheoremB:
      return {whitehead_route({a.root, a.exponent}, false, options)};
  }
  return {};
}

OutClass out_class(const Word& R, Assumptions assumptions, const EngineOptions& options) {
  const Applicability a = triage(R, assumptions);
  switch (a.kind) {
    case Case::NotOneEnded:
      throw OutUndefined(kNotOneEndedWarning);
    case Case::Unsupported:
      throw OutUndefined(unsupported_reason(a));
    default:
      break;
  }
  if (commutator_power(R)) return OutClass::GL2Z;
  return detect(R, assumptions, options).verdict == Verdict::NonTrivial ? OutClass::VirtuallyZ
                                                                        : OutClass::Finite;
}

JsjReport analyze(const std::string& text, Assumptions assumptions,
                  const EngineOptions& options) {
  JsjReport report = analyze(parse_relator(text), assumptions, options);
  report.input = text;
  return report;
}

JsjReport analyze(const Word& R, Assumptions assumptions, const EngineOptions& options) {
  JsjReport report;
  report.input = R.str();
  report.relator = R;
  if (R.empty()) {
    report.applicability.kind = Case::NotOneEnded;
    report.warnings.emplace_back("trivial relator: the group is free of rank 2");
    return report;
  }
  report.applicability = triage(R, assumptions);
  const Case kind = report.applicability.kind;

  if (report.applicability.sums.in_derived_subgroup()) {
    try {
      report.polytope = ft_polytope(R);
    } catch (const NotASummand& e) {
      report.warnings.emplace_back(e.what());
    }
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    Detection d = detect(R, assumptions, options);
    report.detect_ms = elapsed_ms(t0);
    report.detection = d.verdict;
    report.warnings.insert(report.warnings.end(), d.warnings.begin(), d.warnings.end());

    if (kind == Case::TheoremA || kind == Case::TheoremB || kind == Case::FuchsianCase) {
      t0 = std::chrono::steady_clock::now();
      report.decomposition = compute(R, assumptions, options);
      report.compute_ms = elapsed_ms(t0);
      report.out = out_class(R, assumptions, options);
      if (report.detection != Verdict::Unknown &&
          (report.detection == Verdict::NonTrivial) != !report.decomposition->trivial()) {
        report.warnings.emplace_back(
            "internal: polytope and Whitehead routes disagree on this relator");
      }
    }
  } catch (const Error& e) {
    report.detection = Verdict::Unknown;
    report.warnings.emplace_back(e.what());
  }
  return report;
}

}  // namespace orjsj
