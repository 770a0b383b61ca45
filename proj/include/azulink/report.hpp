#pragma once

#include <string>
#include <vector>

#include "azulink/curvediv.hpp"
#include "azulink/hyperjac.hpp"
#include "azulink/surfacecurve.hpp"

namespace azulink {

// One component of the reducible-character curve as reported.
struct ComponentReport {
  std::string label;
  std::string description;
  bool selected = false;
  long ord_alpha = 0;
  long ord_beta = 0;
  std::string symbol;
};

// The nontriviality certificate for the tame-symbol class; exactly one kind
// per case.  Unused fields stay empty.
struct CertificateReport {
  std::string kind;  // squarefree | elliptic_deduction | jacobian_triple
  // squarefree: the symbol representative in the line parameter
  std::string polynomial;
  long degree = 0;
  // elliptic_deduction: divisor chase on the genus-1 plane model
  long genus = 0;
  std::string divisor;
  std::string final_state;
  // jacobian_triple: Mumford arithmetic on the genus-3 cover
  std::string weierstrass;
  std::string final_triple;
  std::string identity;
  std::vector<std::string> trace;
  std::vector<std::string> notes;
};

struct CaseReport {
  LinkTag tag;
  std::string case_name;
  std::vector<ComponentReport> components;
  long ord_alpha = 0;
  long ord_beta = 0;
  std::string tame_symbol_rep;
  CertificateReport certificate;
  bool extends = true;
  long elapsed_ms = 0;
};

// Full pipeline for one case: decomposition identity, curve extraction,
// orders, tame symbol, then the case-specific certificate and verdict.
// Internal verification failures throw with a diagnostic naming the
// violated identity.
CaseReport run_case(LinkTag tag, bool timings = false);
std::vector<CaseReport> run_all(bool timings = false);

std::string report_text(const CaseReport& r);
std::string report_json(const CaseReport& r);
std::string reports_json(const std::vector<CaseReport>& rs);

}  // namespace azulink
