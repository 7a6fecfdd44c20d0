#pragma once
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmalg/homalg.hpp"

namespace cma {

struct HypothesisResult {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> witness;
};

enum class StatementKind { Theorem, Conjecture, Informational };
enum class Relation { Le, Eq };

struct BoundReport {
  std::string theorem_id;
  StatementKind kind = StatementKind::Theorem;
  Relation relation = Relation::Le;
  std::vector<std::pair<std::string, int>> params;
  std::vector<HypothesisResult> hypotheses;
  int lhs = kNegInf;
  int rhs = kNegInf;
  std::optional<std::array<int, 3>> rhs_parts;  // X, Y, Z
  std::string note;

  bool applicable() const;
  bool numeric_holds() const;
  bool violated() const { return applicable() && !numeric_holds(); }
  bool sharp() const { return lhs == rhs; }
  bool near_sharp() const;  // finite and 0 <= rhs - lhs <= 1
  void hypothesis(const std::string& name, bool pass, std::vector<std::pair<std::string, long long>> w = {});
};

// Cached homological data of a module.
class ModuleData {
 public:
  ModuleData(const RingContext& R, ModulePresentation M);
  const RingContext& ring() const { return R_; }
  const ModulePresentation& module() const { return M_; }
  const BettiTable& betti();
  int t(int p);  // kNegInf outside the resolution
  int reg();
  int dim();
  int codim();
  int depth();
  bool zero();
  bool cohen_macaulay();
  int reg_h(int j);  // reg H^j_m
  std::optional<Ideal> cyclic_ideal() const;  // I when the module is presented as S/I

 private:
  int finite_top();
  RingContext R_;
  ModulePresentation M_;
  std::optional<BettiTable> betti_;
  std::optional<int> dim_;
  std::optional<std::vector<int>> reg_h_;
  std::optional<int> top_;
};

// Cached Tor data of a pair.
class PairData {
 public:
  PairData(ModuleData& A, ModuleData& B) : A_(A), B_(B) {}
  ModuleData& A() { return A_; }
  ModuleData& B() { return B_; }
  ModuleData& tor(int k);
  int tor_reg(int k);
  int tor_reg_h(int k, int j);
  int delta();  // dim Tor_1, -1 when Tor_1 = 0

 private:
  // Hilbert function of Tor_k when both modules are cyclic and one has finite length.
  const std::optional<GradedVectorSpaceSummary>& finite_tor(int k);
  std::map<int, std::optional<GradedVectorSpaceSummary>> finite_;
  ModuleData& A_;
  ModuleData& B_;
  std::map<int, std::unique_ptr<ModuleData>> tor_;
};

// Local-cohomology bound with the max{X, Y, Z} right side, plus the specializations it implies.
std::vector<BoundReport> check_tor_bound(PairData& P, int j, int k, int p, int q);
BoundReport check_generalization_of_regularity(PairData& P, int j, int k);
BoundReport check_cm_case(PairData& P, int j, int k);
BoundReport check_reg_tor(PairData& P, int k);
BoundReport check_newregtor(PairData& P, int k, int p);
BoundReport check_reg_tor_cm(PairData& P, int k);
BoundReport check_subadd(PairData& P, int p);
BoundReport check_socle_estimation(ModuleData& A, const Ideal& J, int q);
BoundReport check_socle_stepwise(const Ideal& I, int step);
BoundReport check_intersection_product(const Ideal& I, const Ideal& J);

std::vector<BoundReport> check_products(const Ideal& I, const Ideal& J);
std::vector<BoundReport> check_powers(const Ideal& I, int t);
std::vector<BoundReport> check_specialization(const Ideal& I, int p, int s, uint64_t seed);
std::vector<BoundReport> check_initials(const Ideal& I);
BoundReport check_hehi(const Ideal& I, uint64_t seed);

BoundReport check_quadric_count(const Ideal& I);
std::vector<BoundReport> check_mu_bound(const Ideal& I);
BoundReport check_rees(const Ideal& I, uint64_t seed, int cap = 10);
BoundReport check_monomial_linear(const Ideal& I, int cap = 8);
BoundReport check_contains(const Ideal& I);
std::vector<BoundReport> check_monomial_powers(const RingContext& R, int d, int q);
BoundReport check_monomial_criterion(const RingContext& R, int d, int cap = 8);

std::vector<BoundReport> check_partial_annihilation(const Ideal& I, int t);
BoundReport check_reg_of_A(const Ideal& I, int t);
BoundReport check_gorenstein_torsion(const Ideal& I, int t);
BoundReport check_instant_elimination(const Ideal& V);
std::vector<BoundReport> check_generator_bound(const Ideal& I);

BoundReport check_eisenbud_ulrich(const Ideal& I);
std::vector<BoundReport> check_us_reg(const Ideal& I, int k);
std::vector<BoundReport> check_us(const Ideal& I, int cap = 8);
BoundReport check_gin_conjecture(const Ideal& I, uint64_t seed);
BoundReport check_sym_torsion_conj(const Ideal& I, int t);

// Inputs for running a named statement from the command line.
struct CheckInput {
  std::optional<ModulePresentation> A, B;
  std::optional<Ideal> I, J;  // the ideals behind A and B
  int j = 0, k = 0, p = 0, q = 0, t = 2, s = 1;
  int d = 2;
  uint64_t seed = 1;
  int power_cap = 8;
  int reduction_cap = 10;
};
std::vector<std::string> check_ids();
std::vector<BoundReport> run_check(const std::string& id, const RingContext& R, const CheckInput& in);

struct FuzzConfig {
  uint64_t seed = 1;
  int count = 200;
  int n_min = 3, n_max = 4;
  int d_min = 2, d_max = 3;
  int jobs = 1;
  bool conjectures = true;
  // Restricts generation to linearly presented m-primary forms.
  bool linearly_presented_only = false;
  std::vector<std::string> only;  // statement ids to run; empty means all
};

struct FuzzFinding {
  int instance = 0;
  std::string source;  // IdealSource text
  BoundReport report;
};

struct StatementStats {
  long long checks = 0;
  long long applicable = 0;
  long long holds = 0;
  long long sharp = 0;
  long long near_sharp = 0;
};

struct FuzzReport {
  FuzzConfig config;
  int instances = 0;
  int hypothesis_satisfying = 0;  // instances with at least one applicable theorem check
  long long checks = 0;
  std::vector<FuzzFinding> violations;             // theorems
  std::vector<FuzzFinding> conjecture_violations;  // conjectures
  std::vector<FuzzFinding> near_sharp;
  std::vector<std::pair<int, std::string>> errors;  // instance, message
  std::map<std::string, StatementStats> stats;
};

struct FuzzInstance {
  int index = 0;
  std::string flavor;
  Ideal I, J;
};
FuzzInstance fuzz_instance(const FuzzConfig& cfg, int index);
std::vector<BoundReport> fuzz_checks(const FuzzInstance& inst, const FuzzConfig& cfg);
FuzzReport fuzz(const FuzzConfig& cfg);

}  // namespace cma
