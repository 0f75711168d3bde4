#include "pointline/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pl {

double upper_bound_sanity(std::size_t n) {
  if (n < 2) {
    throw PreconditionError("sanity bound needs n >= 2");
  }
  const double root = std::floor(std::sqrt(static_cast<double>(n - 1)));
  return 4.0 * std::sqrt(2.0) / std::max(1.0, root);
}

double empirical_exponent(double gain, double delta) {
  if (!(delta > 0.0) || delta >= 1.0 || !(gain > 0.0)) {
    return 0.0;
  }
  return std::log(gain) / std::log(1.0 / delta);
}

GainRecord gain_report(const Configuration& x) {
  if (!x.claimed_delta()) {
    throw PreconditionError("gain report requires a claimed distance");
  }
  if (x.size() < 2) {
    throw PreconditionError("gain report requires at least 2 elements");
  }
  const VerifyOutcome v = verify_claim(x);
  if (!v.pass) {
    throw std::runtime_error("gain report rejected unverified input: " + v.note);
  }
  GainRecord rec;
  rec.n = x.size();
  rec.delta = v.measured;
  // Divide by the baseline spacing rather than multiplying n*delta/2, so the
  // stacked baseline (delta exactly 2.0/n) scores exactly 1.
  rec.gain = rec.delta / (2.0 / static_cast<double>(rec.n));
  rec.gamma_emp = empirical_exponent(rec.gain, rec.delta);
  rec.witness = v.witness;
  rec.provenance = x.provenance();
  return rec;
}

LevelTable level_table(const std::vector<LevelRecord>& rows) {
  LevelTable t;
  t.rows = rows;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    t.size_ratio.push_back(static_cast<double>(rows[i].size) /
                           static_cast<double>(rows[i - 1].size));
    t.delta_ratio.push_back(rows[i].claimed_delta / rows[i - 1].claimed_delta);
    t.gain_factor.push_back(rows[i].gain / rows[i - 1].gain);
  }
  return t;
}

std::string LevelTable::to_text() const {
  std::ostringstream os;
  os << "level\tsize\tdelta\tgain\tgamma_emp\tverification\n";
  for (const auto& r : rows) {
    os << r.level << '\t' << r.size << '\t' << r.claimed_delta << '\t'
       << r.gain << '\t' << r.gamma_emp << '\t' << r.verification << '\n';
  }
  for (std::size_t i = 0; i < gain_factor.size(); ++i) {
    os << "step " << (i + 1) << ": size x" << size_ratio[i] << ", delta x"
       << delta_ratio[i] << ", gain x" << gain_factor[i] << '\n';
  }
  return os.str();
}

}  // namespace pl
