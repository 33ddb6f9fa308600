#include "wigent/cli/state_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wigent/errors.hpp"

namespace wigent::cli {

namespace {

using nlohmann::json;

double number_at(const json& node, const std::string& where) {
    if (!node.is_number()) throw InvalidArgument(where + " must be a number");
    return node.get<double>();
}

PhotonMixture parse_fock(const json& node) {
    if (!node.is_array() || node.empty()) throw InvalidArgument("\"fock_probs\" must be a non-empty array");
    std::vector<double> probs;
    probs.reserve(node.size());
    for (std::size_t k = 0; k < node.size(); ++k) probs.push_back(number_at(node[k], "fock_probs[" + std::to_string(k) + "]"));
    return PhotonMixture(std::move(probs));
}

gaussian::GaussianState parse_gaussian(const json& node) {
    if (!node.is_object()) throw InvalidArgument("\"gaussian\" must be an object");
    if (!node.contains("mean") || !node.contains("cov")) throw InvalidArgument("\"gaussian\" needs \"mean\" and \"cov\"");
    const json& mean = node.at("mean");
    const json& cov = node.at("cov");
    if (!mean.is_array() || mean.size() != 2) throw InvalidArgument("\"mean\" must hold 2 numbers");
    if (!cov.is_array() || cov.size() != 2 || !cov[0].is_array() || !cov[1].is_array() || cov[0].size() != 2 ||
        cov[1].size() != 2)
        throw InvalidArgument("\"cov\" must be a 2x2 array");
    Eigen::Vector2d c(number_at(mean[0], "mean[0]"), number_at(mean[1], "mean[1]"));
    Eigen::Matrix2d g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            g(i, j) = number_at(cov[i][j], "cov[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    return {c, g};
}

}  // namespace

StateSpec parse_state(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidArgument("state file must hold a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "fock_probs" && key != "gaussian") throw InvalidArgument("unknown state file key \"" + key + "\"");
    const bool fock = doc.contains("fock_probs");
    const bool gauss = doc.contains("gaussian");
    if (fock == gauss) throw InvalidArgument("state file must contain exactly one of \"fock_probs\" or \"gaussian\"");
    if (fock) return parse_fock(doc.at("fock_probs"));
    return parse_gaussian(doc.at("gaussian"));
}

StateSpec load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open state file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state(buffer.str());
}

}  // namespace wigent::cli
