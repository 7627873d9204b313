#include <iomanip>
#include <sstream>

#include "hecke/verifier.hpp"
#include "json.hpp"

namespace hecke {

std::string to_json(const RunReport& r, bool timing) {
  using json = nlohmann::ordered_json;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry;
    entry["name"] = c.name;
    entry["status"] = to_string(c.status);
    entry["elapsed_ms"] = timing ? c.elapsed_ms : 0.0;
    if (c.witness) entry["witness"] = *c.witness;
    checks.push_back(std::move(entry));
  }
  json out;
  out["artifact_version"] = kArtifactVersion;
  out["datum"] = {{"type", r.datum.type}, {"rank", r.datum.rank}, {"cartan", r.datum.cartan}};
  out["order"] = r.order;
  out["guard"] = r.guard;
  out["seed"] = r.seed;
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

std::string to_text(const RunReport& r, bool timing) {
  std::ostringstream os;
  os << "datum " << r.datum.type << " rank " << r.datum.rank << " cartan [";
  for (std::size_t i = 0; i < r.datum.cartan.size(); ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < r.datum.cartan[i].size(); ++j)
      os << (j ? "," : "") << r.datum.cartan[i][j];
    os << ']';
  }
  os << "]  order " << r.order << "  guard " << r.guard << "  seed " << r.seed << '\n';
  os << std::left << std::setw(36) << "check" << std::setw(8) << "status" << "elapsed_ms\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(36) << c.name << std::setw(8) << to_string(c.status)
       << std::fixed << std::setprecision(1) << (timing ? c.elapsed_ms : 0.0) << '\n';
    if (c.witness) os << "    witness: " << *c.witness << '\n';
  }
  return os.str();
}

}  // namespace hecke
