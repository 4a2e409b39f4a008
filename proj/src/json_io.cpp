#include "hlat/json_io.hpp"

#include "hlat/errors.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace hlat {

namespace {

using nlohmann::json;

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kInt64Min = std::numeric_limits<std::int64_t>::min();

Int int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw invalid_input(std::string(what) + ": malformed integer string");
        }
    }
    throw invalid_input(std::string(what) + ": expected an integer");
}

std::size_t parse_rank_suffix(const std::string& spec, std::size_t colon) {
    const std::string digits = spec.substr(colon + 1);
    if (digits.empty() || digits.size() > 6) {
        throw invalid_input("lattice spec '" + spec + "': expected a positive rank after ':'");
    }
    std::size_t n = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw invalid_input("lattice spec '" + spec + "': expected a positive rank after ':'");
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n == 0) {
        throw invalid_input("lattice spec '" + spec + "': rank must be positive");
    }
    return n;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Lattice parse_single_spec(const std::string& raw) {
    const std::string spec = trim(raw);
    if (spec.empty()) throw invalid_input("empty lattice spec");
    if (spec == "e8") return Lattice::e8();
    if (spec.rfind("diag:", 0) == 0) return Lattice::diagonal(parse_rank_suffix(spec, 4));
    if (spec.rfind("gamma:", 0) == 0) return Lattice::gamma(parse_rank_suffix(spec, 5));
    if (!spec.empty() && spec.front() == '{') {
        json j;
        try {
            j = json::parse(spec);
        } catch (const std::exception& e) {
            throw invalid_input(std::string("inline lattice JSON: ") + e.what());
        }
        return lattice_from_json(j);
    }
    std::ifstream in(spec);
    if (!in) {
        throw invalid_input("lattice spec '" + spec +
                            "' is neither e8 | diag:N | gamma:N nor a readable JSON file");
    }
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw invalid_input("lattice file '" + spec + "': " + e.what());
    }
    Lattice lattice = lattice_from_json(j);
    if (lattice.name().empty()) {
        return Lattice::from_gram(lattice.gram(), lattice.sign(), spec);
    }
    return lattice;
}

}  // namespace

nlohmann::json int_to_json(const Int& x) {
    if (x >= kInt64Min && x <= kInt64Max) return x.convert_to<std::int64_t>();
    return x.str();
}

nlohmann::json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

nlohmann::json lattice_to_json(const Lattice& lattice) {
    json gram = json::array();
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < lattice.rank(); ++j) {
            row.push_back(int_to_json(lattice.gram()(i, j)));
        }
        gram.push_back(std::move(row));
    }
    json out;
    out["gram"] = std::move(gram);
    out["sign"] = to_string(lattice.sign());
    if (!lattice.name().empty()) out["name"] = lattice.name();
    return out;
}

Lattice lattice_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw invalid_input("lattice JSON: expected an object");
    for (const auto& item : j.items()) {
        if (item.key() != "gram" && item.key() != "sign" && item.key() != "name") {
            throw invalid_input("lattice JSON: unknown key '" + item.key() + "'");
        }
    }
    if (!j.contains("gram") || !j["gram"].is_array()) {
        throw invalid_input("lattice JSON: missing 'gram' array");
    }
    if (!j.contains("sign") || !j["sign"].is_string()) {
        throw invalid_input("lattice JSON: missing 'sign' (\"positive\" or \"negative\")");
    }
    const std::string sign_str = j["sign"].get<std::string>();
    Sign sign;
    if (sign_str == "positive") {
        sign = Sign::positive;
    } else if (sign_str == "negative") {
        sign = Sign::negative;
    } else {
        throw invalid_input("lattice JSON: sign must be \"positive\" or \"negative\"");
    }
    const auto& rows = j["gram"];
    const std::size_t n = rows.size();
    IMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw invalid_input("lattice JSON: gram must be a square matrix");
        }
        for (std::size_t k = 0; k < n; ++k) {
            gram(i, k) = int_from_json(rows[i][k], "lattice JSON gram entry");
        }
    }
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
    return Lattice::from_gram(std::move(gram), sign, std::move(name));
}

Lattice parse_lattice_spec(const std::string& spec) {
    // '+' builds left-associative direct sums; inline JSON never contains '+'
    // at the top level of the grammar we accept.
    if (trim(spec).empty()) throw invalid_input("empty lattice spec");
    if (!spec.empty() && trim(spec).front() != '{' && spec.find('+') != std::string::npos) {
        std::optional<Lattice> acc;
        std::stringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, '+')) {
            Lattice next = parse_single_spec(part);
            acc = acc ? Lattice::direct_sum(*acc, next) : std::move(next);
        }
        return *acc;
    }
    return parse_single_spec(spec);
}

nlohmann::json config_to_json(const RunConfig& config) {
    json out;
    out["version"] = kVersion;
    out["max_nodes"] = config.max_nodes;
    out["m_max"] = config.m_max;
    out["rank_guard"] = config.rank_guard;
    out["threads"] = config.threads;
    out["seed"] = config.seed;
    return out;
}

nlohmann::json polynomial_to_json(const EtaPolynomial& poly) {
    json terms = json::array();
    for (const auto& [alpha, coeff] : poly.coeffs) {
        json term;
        term["alpha"] = alpha;
        term["coefficient"] = int_to_json(coeff);
        terms.push_back(std::move(term));
    }
    json out;
    out["m"] = poly.m;
    out["rank"] = poly.rank;
    out["terms"] = std::move(terms);
    return out;
}

nlohmann::json certificate_to_json(const EInvariantCertificate& cert, bool include_table) {
    json out;
    out["value"] = int_to_json(cert.value);
    out["num_classes"] = cert.num_classes;
    out["nodes_visited"] = cert.nodes_visited;
    json witness;
    witness["class_mask"] = cert.witness_mask;
    witness["class"] = vec_to_json(cert.witness_class);
    witness["w"] = vec_to_json(cert.witness_w);
    witness["m"] = cert.witness_m;
    witness["min_norm"] = int_to_json(cert.witness_min_norm);
    witness["eta"] = polynomial_to_json(cert.witness_eta);
    out["witness"] = std::move(witness);
    if (include_table) {
        json table = json::array();
        for (const auto& row : cert.table) {
            json r;
            r["class_mask"] = row.rep_mask;
            r["min_norm"] = int_to_json(row.min_norm);
            r["min_m"] = row.min_m ? json(*row.min_m) : json(nullptr);
            r["contribution"] = row.contribution ? int_to_json(*row.contribution) : json(nullptr);
            r["minimizer_count"] = row.minimizer_count;
            r["nodes"] = row.nodes;
            table.push_back(std::move(r));
        }
        out["table"] = std::move(table);
    }
    return out;
}

}  // namespace hlat
