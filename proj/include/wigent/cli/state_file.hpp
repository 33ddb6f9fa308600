#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "wigent/gaussian.hpp"
#include "wigent/photonmix.hpp"

namespace wigent::cli {

/// Contents of a state file: {"fock_probs": [...]} or
/// {"gaussian": {"mean": [x, p], "cov": [[a, b], [b, c]]}}.
using StateSpec = std::variant<PhotonMixture, gaussian::GaussianState>;

/// Throws InvalidArgument on malformed JSON, a missing or duplicated variant,
/// or values violating the target type's invariants.
StateSpec parse_state(const std::string& json_text);
StateSpec load_state(const std::filesystem::path& path);

}  // namespace wigent::cli
