#include "hedgehog/report.hpp"

#include <sstream>

namespace hedgehog {

std::string SearchReport::to_text() const {
  std::ostringstream out;
  out << "report " << operation << '\n';
  out << "seed: " << seed << '\n';
  for (const auto &[k, v] : parameters)
    out << "param." << k << ": " << v << '\n';
  out << "outcome: " << outcome << '\n';
  out << "tries: " << tries << '\n';
  if (winning_try >= 0)
    out << "winning_try: " << winning_try << '\n';
  for (const auto &[k, v] : details)
    out << "detail." << k << ": " << v << '\n';
  return out.str();
}

} // namespace hedgehog
