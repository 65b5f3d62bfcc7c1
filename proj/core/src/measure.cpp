#include "orlicz/measure.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "orlicz/errors.hpp"

namespace orlicz {

MeasureSpaceDesc MeasureSpaceDesc::finite(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("finite measure needs 0 < mass < inf");
  return {Kind::finite, mass};
}

SimpleFunction::SimpleFunction(std::vector<Atom> atoms, MeasureSpaceDesc space)
    : atoms_(std::move(atoms)), space_(space) {
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.value)) throw DomainError("atom values must be finite");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) throw DomainError("atom weights must be finite and > 0");
    total += a.weight;
  }
  if (space_.total_mass.is_finite() && total > space_.total_mass.value() * (1.0 + 1e-12))
    throw DomainError("atom weights exceed the total mass of the space");
}

double SimpleFunction::total_weight() const {
  double total = 0.0;
  for (const auto& a : atoms_) total += a.weight;
  return total;
}

bool SimpleFunction::is_zero() const {
  for (const auto& a : atoms_)
    if (a.value != 0.0) return false;
  return true;
}

SimpleFunction SimpleFunction::scaled(double c) const {
  SimpleFunction out = *this;
  for (auto& a : out.atoms_) a.value *= c;
  return out;
}

SimpleFunction SimpleFunction::load(std::istream& in, MeasureSpaceDesc space) {
  std::vector<Atom> atoms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double v, w;
    if (!(ls >> v)) continue;
    if (!(ls >> w)) throw DomainError("line " + std::to_string(lineno) + ": expected two columns");
    atoms.push_back({v, w});
  }
  return SimpleFunction(std::move(atoms), space);
}

}  // namespace orlicz
