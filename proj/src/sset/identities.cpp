#include "simpcat/sset/identities.hpp"

#include <sstream>

namespace simpcat {

std::string IdentityViolation::describe() const {
  std::ostringstream os;
  os << identity << " fails at degree " << degree << " (i=" << i << ", j=" << j << ") on simplex "
     << simplex;
  return os.str();
}

}  // namespace simpcat
