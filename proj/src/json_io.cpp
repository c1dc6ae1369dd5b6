#include "positroid/json_io.hpp"

#include <algorithm>

namespace positroid {

InputKind detect_kind(const Json& j) {
    if (!j.is_object()) throw parse_error("expected a JSON object");
    if (j.contains("bases")) return InputKind::matroid;
    if (j.contains("signs")) return InputKind::chirotope;
    if (j.contains("entries")) return InputKind::matrix;
    throw parse_error("object has none of the keys bases/signs/entries");
}

Json subset_to_json(Mask m) {
    Json arr = Json::array();
    for (int e : elements(m)) arr.push_back(e);
    return arr;
}

namespace {

int get_int(const Json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw parse_error(std::string("missing integer field \"") + key + "\"");
    const int v = j[key].get<int>();
    if (v < lo || v > hi)
        throw parse_error(std::string("field \"") + key + "\" out of range");
    return v;
}

Mask subset_from_json(const Json& arr, int n, const char* what) {
    if (!arr.is_array()) throw parse_error(std::string(what) + " must be an array");
    Mask m = 0;
    int prev = 0;
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw parse_error(std::string(what) + " entries must be integers");
        const int e = v.get<int>();
        if (e < 1 || e > n)
            throw parse_error(std::string(what) + " entry out of range 1..n");
        if (e <= prev)
            throw parse_error(std::string(what) + " entries must be sorted and distinct");
        prev = e;
        m |= element_bit(e);
    }
    return m;
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
    if (m.ground() != full_mask(m.n()))
        throw error("only matroids on the full [n] serialize; reindex first");
    std::vector<Mask> bases = m.bases();
    std::sort(bases.begin(), bases.end(), lex_less);
    Json j;
    j["n"] = m.n();
    Json arr = Json::array();
    for (Mask b : bases) arr.push_back(subset_to_json(b));
    j["bases"] = arr;
    return j;
}

Matroid matroid_from_json(const Json& j) {
    const int n = get_int(j, "n", 0, kMaxGroundSize);
    if (!j.contains("bases") || !j["bases"].is_array())
        throw parse_error("missing array field \"bases\"");
    std::vector<Mask> bases;
    Mask prev = 0;
    bool first = true;
    for (const auto& b : j["bases"]) {
        const Mask mask = subset_from_json(b, n, "basis");
        if (!first && !lex_less(prev, mask))
            throw parse_error("bases must be listed in sorted order without duplicates");
        bases.push_back(mask);
        prev = mask;
        first = false;
    }
    try {
        return Matroid::validate(n, bases);
    } catch (const error& e) {
        throw parse_error(std::string("not a matroid: ") + e.what());
    }
}

namespace {

std::string subset_key(Mask m) {
    std::string s;
    for (int e : elements(m)) {
        if (!s.empty()) s += ",";
        s += std::to_string(e);
    }
    return s;
}

}  // namespace

Json chirotope_to_json(const Chirotope& chi) {
    Json j;
    j["n"] = chi.n();
    j["d"] = chi.d();
    // Nonzero keys in lex order of the subsets.
    std::vector<Mask> support;
    const std::int64_t count = binom(chi.n(), chi.d());
    for (std::int64_t r = 0; r < count; ++r)
        if (chi.signs()[r] != 0) support.push_back(colex_unrank(r, chi.d(), chi.n()));
    std::sort(support.begin(), support.end(), lex_less);
    Json signs = Json::object();
    for (Mask m : support) signs[subset_key(m)] = chi.sign_of(m);
    j["signs"] = signs;
    return j;
}

Chirotope chirotope_from_json(const Json& j) {
    const int n = get_int(j, "n", 0, kMaxGroundSize);
    const int d = get_int(j, "d", 0, n);
    if (!j.contains("signs") || !j["signs"].is_object())
        throw parse_error("missing object field \"signs\"");
    std::vector<std::int8_t> signs(binom(n, d), 0);
    for (const auto& [key, value] : j["signs"].items()) {
        Json arr = Json::array();
        std::size_t start = 0;
        if (!key.empty()) {
            while (true) {
                const std::size_t comma = key.find(',', start);
                try {
                    arr.push_back(std::stoi(key.substr(start, comma - start)));
                } catch (const std::exception&) {
                    throw parse_error("bad subset key: " + key);
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        const Mask m = subset_from_json(arr, n, "sign key");
        if (popcount(m) != d) throw parse_error("sign key is not a d-subset: " + key);
        if (!value.is_number_integer())
            throw parse_error("sign values must be -1, 0 or 1");
        const int s = value.get<int>();
        if (s < -1 || s > 1) throw parse_error("sign values must be -1, 0 or 1");
        signs[colex_rank(m)] = static_cast<std::int8_t>(s);
    }
    try {
        return Chirotope::validated(n, d, std::move(signs));
    } catch (const error& e) {
        throw parse_error(std::string("not a chirotope: ") + e.what());
    }
}

Json matrix_to_json(const RationalMatrix& a) {
    Json j;
    j["d"] = a.rows();
    j["n"] = a.cols();
    Json rows = Json::array();
    for (int r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < a.cols(); ++c) row.push_back(rational_to_string(a.at(r, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

RationalMatrix matrix_from_json(const Json& j) {
    const int d = get_int(j, "d", 0, 16);
    const int n = get_int(j, "n", 0, kMaxGroundSize);
    if (!j.contains("entries") || !j["entries"].is_array() ||
        static_cast<int>(j["entries"].size()) != d)
        throw parse_error("\"entries\" must be an array of d rows");
    RationalMatrix a(d, n);
    for (int r = 0; r < d; ++r) {
        const auto& row = j["entries"][r];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw parse_error("each row must have n entries");
        for (int c = 0; c < n; ++c) {
            const auto& v = row[c];
            if (v.is_number_integer())
                a.at(r, c) = Rational(v.get<long>());
            else if (v.is_string())
                a.at(r, c) = parse_rational(v.get<std::string>());
            else
                throw parse_error("matrix entries must be integers or \"p/q\" strings");
        }
    }
    return a;
}

Json poset_to_json(const Poset& p) {
    Json j;
    Json ids = Json::array();
    for (int x = 0; x < p.size(); ++x) ids.push_back(p.label(x));
    j["elements"] = ids;
    Json covers = Json::array();
    for (auto [lo, hi] : p.covers()) covers.push_back(Json::array({lo, hi}));
    j["covers"] = covers;
    Json ranks = Json::array();
    for (int r : p.element_ranks()) ranks.push_back(r);
    j["ranks"] = ranks;
    return j;
}

std::string poset_to_dot(const Poset& p) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int x = 0; x < p.size(); ++x)
        out += "  v" + std::to_string(x) + " [label=\"" + p.label(x) + "\"];\n";
    for (auto [lo, hi] : p.covers())
        out += "  v" + std::to_string(lo) + " -> v" + std::to_string(hi) + ";\n";
    return out + "}\n";
}

}  // namespace positroid
