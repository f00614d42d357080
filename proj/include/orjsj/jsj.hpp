#pragma once

// Decision procedures for the Z_max-JSJ decomposition of <a, b | R>.
//
// Hyperbolicity and the RG property are never checked: for a torsion-free
// relator (exponent 1) the caller must assert one of them, otherwise the
// input is reported as unsupported.

#include <optional>
#include <string>
#include <vector>

#include "orjsj/hnn_subgroup.hpp"
#include "orjsj/polytope.hpp"
#include "orjsj/whitehead.hpp"
#include "orjsj/word.hpp"

namespace orjsj {

struct Assumptions {
  bool hyperbolic = false;
  bool rg = false;

  bool any() const { return hyperbolic || rg; }
};

struct EngineOptions {
  std::size_t orbit_cap = kDefaultOrbitCap;
};

enum class Case { NotOneEnded, FuchsianCase, TheoremA, TheoremB, Unsupported };

struct Applicability {
  Case kind = Case::Unsupported;
  Word root;
  int exponent = 1;
  ExponentSums sums;
};

enum class Verdict { Trivial, NonTrivial, Unknown };

struct Detection {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> warnings;
};

// HNN extension <x, y | T0^n> *_b with y = b^-1 a b (x standing for a).
struct HnnDecomposition {
  XYWord base_relator;
  int exponent = 1;
  Word representative;  // T = T0(a, b^-1 a b)
};

// Empty hnn: single vertex with vertex group G and no edges.
struct JsjDecomposition {
  std::optional<HnnDecomposition> hnn;

  bool trivial() const { return !hnn.has_value(); }
};

enum class OutClass { Finite, VirtuallyZ, GL2Z };

// Throws EmptyWord for the identity.
Applicability triage(const Word& R, Assumptions assumptions);

Detection detect(const Word& R, Assumptions assumptions, const EngineOptions& options = {});

// Throws JsjUndefined when the input is not one-ended or is unsupported.
JsjDecomposition compute(const Word& R, Assumptions assumptions,
                         const EngineOptions& options = {});

// Throws OutUndefined when the input is not one-ended or is unsupported.
OutClass out_class(const Word& R, Assumptions assumptions, const EngineOptions& options = {});

struct JsjReport {
  std::string input;
  Word relator;
  Applicability applicability;
  std::optional<LatticePolytope> polytope;
  Verdict detection = Verdict::Unknown;
  std::optional<JsjDecomposition> decomposition;
  std::optional<OutClass> out;
  std::vector<std::string> warnings;
  double detect_ms = 0;
  double compute_ms = 0;
};

// Never throws on theorem-inapplicable input; parse errors propagate.
JsjReport analyze(const std::string& text, Assumptions assumptions,
                  const EngineOptions& options = {});
JsjReport analyze(const Word& R, Assumptions assumptions, const EngineOptions& options = {});

std::string case_name(Case c);
std::string verdict_name(Verdict v);
std::string out_class_name(OutClass c);

}  // namespace orjsj
