#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie2/algebra.hpp"

namespace homlie2 {

using Params = std::map<std::string, Elem>;

// The token "rs2" in rows B5/B6 is read either as s*r2 or as r2.
enum class Rs2Reading { SR2, R2 };

enum class AlphaShape { Diagonal, Jordan, All };
AlphaShape parse_alpha_shape(const std::string& s);

struct FamilyDescriptor {
  std::string name;
  std::vector<std::string> params;  // user-supplied parameters
  std::string conditions;           // human-readable admissibility conditions
  std::string sdim;                 // "3|2", "1|1" or "1|2"
};

const std::vector<FamilyDescriptor>& families();
const FamilyDescriptor& family(const std::string& name);

struct BuildOptions {
  Rs2Reading rs2 = Rs2Reading::SR2;
};

// Builds the named algebra over `f`. Missing parameters default to 0 unless the
// family determines them. Throws ConstraintViolation naming the failed condition.
HomLieSuper2 build(const std::string& name, const Params& params, const Field& f, const BuildOptions& opt = {});

// Twist of oo given by (d1, d2, e1, e2): x1 -> d1 x1 + d2 y1, y1 -> e1 x1 + e2 y1.
Matrix oo_morphism(const Field& f, Elem d1, Elem d2, Elem e1, Elem e2);

// The (1|2) coordinates used by the tables.
struct Table12Coords {
  Elem rho1 = 0, rho2 = 0, rho3 = 0;
  Elem s = 0, t1 = 0, r2 = 0;
  Elem a1 = 0, a2 = 0, b1 = 0, b2 = 0;
  bool jordan = false;
};
std::optional<Table12Coords> table12_coords(const HomLieSuper2& g);
// Empty when every condition of the row holds, else the first violated condition.
std::string row_violation(const std::string& row, const Table12Coords& c, const Field& f, Rs2Reading rs2);
// Closed form of s(f1 + lambda f2) as printed for the row (coefficient of e).
Elem table_lambda_form(const std::string& row, const Table12Coords& c, const Field& f, Elem lambda);

std::vector<std::string> match_to_family(const HomLieSuper2& g, Rs2Reading rs2 = Rs2Reading::SR2);

struct EnumerationOptions {
  bool canonicalize = false;  // quotient by permutations within each parity class
  bool require_multiplicative = true;
  unsigned threads = 0;       // 0: HOMLIE2_THREADS or hardware concurrency
};

std::vector<HomLieSuper2> enumerate_structures(std::size_t m, std::size_t n, const Field& f, AlphaShape shape,
                                               const EnumerationOptions& opt = {});
std::vector<Matrix> alpha_candidates(std::size_t m, std::size_t n, const Field& f, AlphaShape shape);

unsigned worker_threads(unsigned requested = 0);

// Stub: module basis and twist for the oo-module with basis m1, m3 | m2; no action constants.
struct ModuleStub {
  SuperBasis basis;
  Matrix beta;
};
ModuleStub oo_module_stub(const Field& f, Elem d1, Elem d2, Elem e1, Elem e2);

}  // namespace homlie2
