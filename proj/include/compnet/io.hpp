#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "compnet/circuit.hpp"
#include "compnet/laws.hpp"
#include "compnet/vectfield.hpp"

namespace compnet {

/// A network document: one decorated cospan under either backend.
using Network = std::variant<Circuit, OpenSystem>;

std::string network_backend(const Network& n);

Network network_from_json(const nlohmann::json& j);
nlohmann::json network_to_json(const Network& n);

/// Canonical serialization: 2-space indent, sorted keys, trailing newline.
std::string canonical_text(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
Network load_network_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Expression tree over named networks under compose and tensor.
struct PipelineExpr {
  enum class Kind { Leaf, Compose, Tensor };
  Kind kind = Kind::Leaf;
  std::string name;  // leaf only
  std::unique_ptr<PipelineExpr> lhs, rhs;
  std::string position;  // JSON path, for diagnostics
};

struct Pipeline {
  std::map<std::string, Network> networks;
  PipelineExpr root;
};

/// Parses a pipeline document; "file" references are resolved relative to
/// the document's directory.
Pipeline load_pipeline_file(const std::string& path);
Pipeline pipeline_from_json(const nlohmann::json& j, const std::string& base_dir);

/// Type-checks the whole tree (backend tags and feet at every compose)
/// before evaluating anything; positions are reported on mismatch. With
/// normalize set, the apex of the result is renumbered by minimal
/// representative over the coproduct of all leaf apexes, which makes any
/// two reassociations of the same pipeline serialize identically.
Network eval_pipeline(const Pipeline& p, bool normalize);

Network network_compose(const Network& a, const Network& b);
Network network_tensor(const Network& a, const Network& b);

nlohmann::json law_reports_json(const std::vector<LawReport>& reports,
                                const CaseGenerator& gen);

}  // namespace compnet
