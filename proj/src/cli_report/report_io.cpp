#include <sstream>

#include "k3le/classify.hpp"

namespace k3le::report {

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string weight_text(const KStatusRecord& r) { return r.weight ? std::to_string(r.weight->value) : ""; }

// compact "a-b" ranges for the markdown summary
std::string ranges(const std::vector<Int>& ks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ks.size();) {
    std::size_t j = i;
    while (j + 1 < ks.size() && ks[j + 1] == ks[j] + 1) ++j;
    if (i) os << ", ";
    os << ks[i];
    if (j > i) os << "-" << ks[j];
    i = j + 1;
  }
  return os.str();
}

}  // namespace

nlohmann::json to_json(const Classification& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : c.records) {
    nlohmann::json j = {{"k", r.k}, {"status", to_string(r.status)}, {"evidence", r.evidence}, {"partial", r.partial}};
    j["root_count"] = r.root_count ? nlohmann::json(*r.root_count) : nlohmann::json(nullptr);
    j["weight"] = r.weight ? nlohmann::json(r.weight->value) : nlohmann::json(nullptr);
    j["weight_flag"] = r.weight ? nlohmann::json(to_string(r.weight->flag)) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string to_csv(const Classification& c) {
  std::ostringstream os;
  os << "k,status,weight,evidence\n";
  for (const auto& r : c.records) os << r.k << ',' << to_string(r.status) << ',' << weight_text(r) << ',' << join(r.evidence, ';') << '\n';
  return os.str();
}

std::string to_markdown(const Classification& c) {
  std::ostringstream os;
  os << "| k | status | weight | evidence |\n|---|---|---|---|\n";
  std::vector<Int> general, nonneg, unirational, open;
  for (const auto& r : c.records) {
    os << "| " << r.k << " | " << to_string(r.status) << (r.partial ? " (partial)" : "") << " | " << weight_text(r)
       << " | " << join(r.evidence, ' ') << " |\n";
    switch (r.status) {
      case Status::general_type:
        general.push_back(r.k);
        break;
      case Status::kodaira_nonneg:
        nonneg.push_back(r.k);
        break;
      case Status::unirational:
        unirational.push_back(r.k);
        break;
      case Status::open:
        open.push_back(r.k);
        break;
    }
  }
  os << "\n[^general]: general type: " << ranges(general) << "\n";
  os << "[^nonneg]: non-negative Kodaira dimension (not general type by this method): " << ranges(nonneg) << "\n";
  os << "[^unirational]: unirational: " << ranges(unirational) << "\n";
  os << "[^open]: open: " << ranges(open) << "\n";
  if (c.partial) os << "\nSome entries are partial: the witness stores do not cover them.\n";
  return os.str();
}

}  // namespace k3le::report
