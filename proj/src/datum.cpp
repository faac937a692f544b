#include "klr/datum.hpp"

#include "klr/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

namespace klr {

const char* datumErrorName(DatumErrorKind k) {
    switch (k) {
        case DatumErrorKind::OddDiagonal: return "OddDiagonal";
        case DatumErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
        case DatumErrorKind::NotSymmetrizable: return "NotSymmetrizable";
        case DatumErrorKind::BadOrientation: return "BadOrientation";
        case DatumErrorKind::BadShape: return "BadShape";
    }
    return "Unknown";
}

BorcherdsCartanDatum BorcherdsCartanDatum::validate(const RawDatum& raw) {
    BorcherdsCartanDatum d;
    const size_t n = raw.A.size();
    if (raw.indices.size() != n)
        throw DatumError(DatumErrorKind::BadShape, "index list and matrix size differ");
    for (const auto& row : raw.A)
        if (row.size() != n)
            throw DatumError(DatumErrorKind::BadShape, "Cartan matrix is not square");

    d.indices_ = raw.indices;
    d.A_ = raw.A;

    for (size_t i = 0; i < n; i++) {
        long aii = raw.A[i][i];
        if (aii % 2 != 0 || aii > 2)
            throw DatumError(DatumErrorKind::OddDiagonal,
                             "a_ii must lie in {2, 0, -2, -4, ...}; got " +
                                 std::to_string(aii) + " at " + raw.indices[i]);
        for (size_t j = 0; j < n; j++) {
            if (i != j && raw.A[i][j] > 0)
                throw DatumError(DatumErrorKind::PositiveOffDiagonal,
                                 "a_ij must be <= 0 for i != j; got " +
                                     std::to_string(raw.A[i][j]));
        }
    }

    if (raw.D) {
        d.D_ = *raw.D;
        if (d.D_.size() != n)
            throw DatumError(DatumErrorKind::BadShape, "symmetrizer length mismatch");
        for (long ri : d.D_)
            if (ri <= 0)
                throw DatumError(DatumErrorKind::NotSymmetrizable,
                                 "symmetrizer entries must be positive");
        for (size_t i = 0; i < n; i++)
            for (size_t j = 0; j < n; j++)
                if (d.D_[i] * raw.A[i][j] != d.D_[j] * raw.A[j][i])
                    throw DatumError(DatumErrorKind::NotSymmetrizable,
                                     "r_i a_ij != r_j a_ji at (" + raw.indices[i] + "," +
                                         raw.indices[j] + ")");
    } else {
        auto found = find_symmetrizer(raw.A);
        if (!found)
            throw DatumError(DatumErrorKind::NotSymmetrizable,
                             "no positive integer symmetrizer exists");
        d.D_ = *found;
    }

    for (size_t i = 0; i < n; i++) {
        if (raw.A[i][i] == 2) d.iPlus_.push_back(static_cast<int>(i));
        else d.iMinus_.push_back(static_cast<int>(i));
    }

    // Edges of the graph: unordered pairs {i, j}, i != j, with i.j != 0.
    std::set<std::pair<int, int>> edges;
    for (size_t i = 0; i < n; i++)
        for (size_t j = i + 1; j < n; j++)
            if (d.bilinear(static_cast<int>(i), static_cast<int>(j)) != 0)
                edges.insert({static_cast<int>(i), static_cast<int>(j)});

    if (raw.orientation) {
        std::set<std::pair<int, int>> seen;
        for (auto [from, to] : *raw.orientation) {
            if (from < 0 || to < 0 || from >= static_cast<int>(n) || to >= static_cast<int>(n))
                throw DatumError(DatumErrorKind::BadOrientation, "edge endpoint out of range");
            std::pair<int, int> key{std::min(from, to), std::max(from, to)};
            if (!edges.count(key))
                throw DatumError(DatumErrorKind::BadOrientation,
                                 "oriented pair is not an edge of the graph");
            if (seen.count(key))
                throw DatumError(DatumErrorKind::BadOrientation, "duplicate edge orientation");
            seen.insert(key);
            d.orientation_.insert({from, to});
        }
        if (seen.size() != edges.size())
            throw DatumError(DatumErrorKind::BadOrientation, "missing edge orientation");
    } else {
        for (auto [i, j] : edges) d.orientation_.insert({i, j});
    }
    return d;
}

int BorcherdsCartanDatum::positionOf(const std::string& label) const {
    for (size_t i = 0; i < indices_.size(); i++)
        if (indices_[i] == label) return static_cast<int>(i);
    return -1;
}

std::optional<std::vector<long>> find_symmetrizer(const std::vector<std::vector<long>>& A) {
    const size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) return std::nullopt;
    // r_i a_ij = r_j a_ji forces r_j = r_i a_ij / a_ji along edges where both
    // entries are nonzero, and is unsatisfiable when exactly one vanishes.
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            if ((A[i][j] == 0) != (A[j][i] == 0)) return std::nullopt;

    std::vector<Rat> value(n, Rat(0));
    std::vector<int> component(n, -1);
    std::vector<long> result(n, 0);
    int comps = 0;
    for (size_t start = 0; start < n; start++) {
        if (component[start] != -1) continue;
        int comp = comps++;
        std::vector<size_t> stack{start};
        std::vector<size_t> members;
        component[start] = comp;
        value[start] = Rat(1);
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            members.push_back(i);
            for (size_t j = 0; j < n; j++) {
                if (i == j || A[i][j] == 0) continue;
                Rat ratio(Int(A[i][j]), Int(A[j][i]));
                ratio.canonicalize(); // mpq arithmetic requires canonical operands
                Rat forced = value[i] * ratio;
                forced.canonicalize();
                if (sgn(forced) <= 0) return std::nullopt; // ratio must stay positive
                if (component[j] == -1) {
                    component[j] = comp;
                    value[j] = forced;
                    stack.push_back(j);
                } else if (value[j] != forced) {
                    return std::nullopt; // inconsistent cycle
                }
            }
        }
        // Clear denominators and reduce: the smallest positive integer
        // solution per component.
        Int lcmDen(1);
        for (size_t m : members) lcmDen = lcm(lcmDen, value[m].get_den());
        auto scaledInt = [&](size_t m) {
            Rat scaled = value[m] * Rat(lcmDen);
            scaled.canonicalize();
            return Int(scaled.get_num());
        };
        Int gcdNum(0);
        for (size_t m : members) gcdNum = gcd(gcdNum, scaledInt(m));
        for (size_t m : members) {
            Int v = scaledInt(m) / gcdNum;
            if (!v.fits_slong_p()) return std::nullopt;
            result[m] = v.get_si();
        }
    }
    // Final confirmation against the full matrix.
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            if (result[i] * A[i][j] != result[j] * A[j][i]) return std::nullopt;
    return result;
}

namespace {

using nlohmann::json;

RawDatum rawFromJson(const json& doc) {
    RawDatum raw;
    if (!doc.is_object() || !doc.contains("indices") || !doc.contains("A"))
        throw DatumError(DatumErrorKind::BadShape, "datum file must contain indices and A");
    raw.indices = doc.at("indices").get<std::vector<std::string>>();
    raw.A = doc.at("A").get<std::vector<std::vector<long>>>();
    if (doc.contains("D") && !doc.at("D").is_null())
        raw.D = doc.at("D").get<std::vector<long>>();
    if (doc.contains("orientation") && !doc.at("orientation").is_null()) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : doc.at("orientation")) {
            if (!e.is_array() || e.size() != 2)
                throw DatumError(DatumErrorKind::BadOrientation, "orientation entries are pairs");
            std::string from = e[0].get<std::string>();
            std::string to = e[1].get<std::string>();
            int fi = -1, ti = -1;
            for (size_t i = 0; i < raw.indices.size(); i++) {
                if (raw.indices[i] == from) fi = static_cast<int>(i);
                if (raw.indices[i] == to) ti = static_cast<int>(i);
            }
            if (fi < 0 || ti < 0)
                throw DatumError(DatumErrorKind::BadOrientation, "unknown index label in orientation");
            edges.push_back({fi, ti});
        }
        raw.orientation = edges;
    }
    return raw;
}

} // namespace

BorcherdsCartanDatum datumFromJsonText(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DatumError(DatumErrorKind::BadShape, std::string("invalid JSON: ") + e.what());
    }
    return BorcherdsCartanDatum::validate(rawFromJson(doc));
}

std::string datumToJsonText(const BorcherdsCartanDatum& d) {
    json doc;
    doc["indices"] = d.indices();
    doc["A"] = d.cartan();
    doc["D"] = d.symmetrizer();
    json orient = json::array();
    for (auto [from, to] : d.orientation())
        orient.push_back({d.label(from), d.label(to)});
    doc["orientation"] = orient;
    return doc.dump(2);
}

BorcherdsCartanDatum datumFromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DatumError(DatumErrorKind::BadShape, "cannot open datum file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return datumFromJsonText(buf.str());
}

} // namespace klr
