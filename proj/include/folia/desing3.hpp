#pragma once

#include "folia/blowup.hpp"
#include "folia/foliation_local.hpp"
#include "folia/unipoly.hpp"
#include "folia/vector_field.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace folia {

// Linear data of a field on C^3 singular along W = {z1 = z2 = 0}:
// P_i = z1 p[i][0](z3) + z2 p[i][1](z3) + higher[i].
struct CurveData3 {
    std::array<std::array<UniPoly, 2>, 3> p;
    std::array<MultiPoly, 3> higher;
};

CurveData3 extract_curve_data(const VectorField& f);

struct EigenData {
    UniPoly trace;  // p10 + p21
    UniPoly det;    // p10 p21 - p11 p20
    UniPoly delta;  // trace^2 - 4 det
    std::optional<UniPoly> delta_sqrt;
};

EigenData eigen_data(const CurveData3& cd);

enum class Case3 { DistinctNonzero, OneZero, Nilpotent };
const char* to_string(Case3 c);

struct CaseReport {
    Case3 tag;
    std::optional<Rational> c_ratio;  // trace^2 / det when constant
    std::optional<Rational> q_ratio;  // rational lambda1/lambda2 solving (1+q)^2/q = c
    bool resonant;                    // lambda1 = m lambda2 or lambda2 = m lambda1 for some 1 <= m <= 64
};

CaseReport case_classify3(const EigenData& e);

struct ElementaryVerdict {
    bool elementary;
    std::string reason;
};

// At least one eigenvalue nonzero and the eigenvalue ratio outside Q_+ at generic points.
ElementaryVerdict elementary_ratio_test(const EigenData& e);

// Curve inside the exceptional divisor, projecting isomorphically onto W.
// chart 1: {u1 = 0, u2 = psi(u3)}; chart 2: {v2 = 0, v1 = psi(v3)}.
struct Branch3 {
    int chart;
    UniPoly psi;
    unsigned multiplicity;
};

// Branches read off the linear data (ell = 0 situation).
std::vector<Branch3> branch_curves3(const CurveData3& cd, const EigenData& e);

// Eigenvalue pair on a branch after the blow-up: (lambda_i, lambda_j - lambda_i).
std::pair<UniPoly, UniPoly> post_blowup_eigen(const CurveData3& cd, const Branch3& branch);

// Hypotheses under which fibre blow-ups never reach an elementary curve.
bool detect_ss_obstruction(const CurveData3& cd);

// Branches found from an actual strict transform in the given chart (0 or 1).
std::vector<Branch3> branches_of_strict(const BlowupResult& bt);

// Strict transform recentred so that the branch becomes {z1 = z2 = 0}.
VectorField follow_branch(const BlowupResult& bt, const Branch3& branch);

// Chart-1 strict transform recentred on the fibre {u1 = 0, u3 = beta},
// with coordinates reordered to (u1, u3 - beta, u2).
VectorField follow_fibre(const BlowupResult& chart1, const Rational& beta);

enum class ResolutionOutcome { ElementaryReached, ObstructionSS, BudgetExceeded, NoHomeomorphicBranch };
const char* to_string(ResolutionOutcome o);

struct ResolutionStep {
    VectorField field;
    Classification cls;
    EigenData eigen;
    Case3 case3;
    bool elementary;
    bool ss_obstruction;
    std::string center;  // how this step's curve was reached
};

struct ResolutionTrace {
    std::vector<ResolutionStep> steps;
    ResolutionOutcome outcome;
    unsigned budget;
    bool order_bound_held;  // m_W_j <= 1 + m_W_0 along the trace
};

struct ResolveOptions {
    unsigned budget = 8;
    bool stop_on_obstruction = false;
    std::optional<BigInt> lambda0;  // raises the budget to the blow-up bound when known
};

ResolutionTrace resolve_curve(const VectorField& f, const ResolveOptions& options);

}  // namespace folia
