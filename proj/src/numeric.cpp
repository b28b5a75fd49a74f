#include "schubert/numeric.hpp"

#include "schubert/error.hpp"

namespace schubert {

Rat ratFromString(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  Rat r;
  if (r.set_str(text, 10) != 0) {
    throw InputError("malformed rational literal: '" + text + "'");
  }
  if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace schubert
