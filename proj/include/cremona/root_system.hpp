#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

enum class RootSystemType { A4, D5, E6, E7, E8 };

inline std::string type_name(RootSystemType t) {
    switch (t) {
        case RootSystemType::A4: return "A4";
        case RootSystemType::D5: return "D5";
        case RootSystemType::E6: return "E6";
        case RootSystemType::E7: return "E7";
        case RootSystemType::E8: return "E8";
    }
    return "?";
}

inline RootSystemType type_from_name(const std::string& s) {
    if (s == "A4") return RootSystemType::A4;
    if (s == "D5") return RootSystemType::D5;
    if (s == "E6") return RootSystemType::E6;
    if (s == "E7") return RootSystemType::E7;
    if (s == "E8") return RootSystemType::E8;
    throw BadParameterError("unknown root system '" + s + "'");
}

// Simply-laced root lattice data.  Simple roots are stored as integer
// vectors: A4 inside the sum-zero sublattice of Z^5, D5 inside Z^5, and the
// E-types inside Z^8 scaled by 2 so that half-integer coordinates stay
// integral (the Gram matrix divides the raw dot products by `scale`).
// Weyl-element matrices act on coordinates in the simple-root basis.
class RootSystem {
  public:
    RootSystemType type;
    unsigned rank;
    unsigned ambient_dim;
    long long scale;
    std::vector<std::vector<long long>> simple_roots; // rank x ambient_dim
    std::vector<std::vector<long long>> gram;         // rank x rank, equals the Cartan matrix
    std::vector<std::vector<long long>> reflections;  // rank matrices, rank x rank

    static std::shared_ptr<const RootSystem> make(RootSystemType t) {
        auto rs = std::make_shared<RootSystem>();
        rs->type = t;
        switch (t) {
            case RootSystemType::A4:
                rs->rank = 4;
                rs->ambient_dim = 5;
                rs->scale = 1;
                for (unsigned i = 0; i < 4; ++i) {
                    std::vector<long long> r(5, 0);
                    r[i] = 1;
                    r[i + 1] = -1;
                    rs->simple_roots.push_back(std::move(r));
                }
                break;
            case RootSystemType::D5:
                rs->rank = 5;
                rs->ambient_dim = 5;
                rs->scale = 1;
                for (unsigned i = 0; i < 4; ++i) {
                    std::vector<long long> r(5, 0);
                    r[i] = 1;
                    r[i + 1] = -1;
                    rs->simple_roots.push_back(std::move(r));
                }
                {
                    std::vector<long long> r(5, 0);
                    r[3] = 1;
                    r[4] = 1;
                    rs->simple_roots.push_back(std::move(r));
                }
                break;
            case RootSystemType::E6:
            case RootSystemType::E7:
            case RootSystemType::E8: {
                unsigned rank = t == RootSystemType::E6 ? 6 : (t == RootSystemType::E7 ? 7 : 8);
                rs->rank = rank;
                rs->ambient_dim = 8;
                rs->scale = 4;
                std::vector<std::vector<long long>> e8 = {
                    {1, -1, -1, -1, -1, -1, -1, 1}, // (e1 + e8 - e2 - ... - e7)/2, doubled
                    {2, 2, 0, 0, 0, 0, 0, 0},
                    {-2, 2, 0, 0, 0, 0, 0, 0},
                    {0, -2, 2, 0, 0, 0, 0, 0},
                    {0, 0, -2, 2, 0, 0, 0, 0},
                    {0, 0, 0, -2, 2, 0, 0, 0},
                    {0, 0, 0, 0, -2, 2, 0, 0},
                    {0, 0, 0, 0, 0, -2, 2, 0},
                };
                for (unsigned i = 0; i < rank; ++i) rs->simple_roots.push_back(e8[i]);
                break;
            }
        }
        rs->build_gram();
        rs->build_reflections();
        rs->verify_cartan();
        return rs;
    }

    std::uint64_t group_order() const {
        switch (type) {
            case RootSystemType::A4: return 120;
            case RootSystemType::D5: return 1920;
            case RootSystemType::E6: return 51840;
            case RootSystemType::E7: return 2903040;
            case RootSystemType::E8: return 696729600ULL;
        }
        return 0;
    }

    unsigned root_count() const {
        switch (type) {
            case RootSystemType::A4: return 20;
            case RootSystemType::D5: return 40;
            case RootSystemType::E6: return 72;
            case RootSystemType::E7: return 126;
            case RootSystemType::E8: return 240;
        }
        return 0;
    }

    // <v, alpha_i> for v in simple-root coordinates: the i-th entry of G v
    long long pairing(const std::vector<long long>& v, unsigned i) const {
        long long s = 0;
        for (unsigned j = 0; j < rank; ++j) s += gram[i][j] * v[j];
        return s;
    }

    // all roots in simple-root coordinates, by reflection closure of the
    // simple roots; the count must match the type
    std::vector<std::vector<long long>> all_roots() const {
        std::set<std::vector<long long>> seen;
        std::vector<std::vector<long long>> frontier;
        for (unsigned i = 0; i < rank; ++i) {
            std::vector<long long> r(rank, 0);
            r[i] = 1;
            if (seen.insert(r).second) frontier.push_back(r);
        }
        while (!frontier.empty()) {
            std::vector<std::vector<long long>> next;
            for (const auto& r : frontier)
                for (unsigned i = 0; i < rank; ++i) {
                    std::vector<long long> img = r;
                    img[i] -= pairing(r, i);
                    if (seen.insert(img).second) next.push_back(std::move(img));
                }
            frontier = std::move(next);
        }
        std::vector<std::vector<long long>> out(seen.begin(), seen.end());
        if (out.size() != root_count())
            throw Error("root closure produced " + std::to_string(out.size()) + " roots");
        return out;
    }

    // a root is positive iff its simple-root coordinates are all >= 0
    static bool is_positive_root(const std::vector<long long>& r) {
        for (long long c : r)
            if (c < 0) return false;
        return true;
    }

    std::vector<long long> ambient_vector(const std::vector<long long>& coords) const {
        std::vector<long long> v(ambient_dim, 0);
        for (unsigned i = 0; i < rank; ++i)
            for (unsigned j = 0; j < ambient_dim; ++j) v[j] += coords[i] * simple_roots[i][j];
        return v;
    }

  private:
    void build_gram() {
        gram.assign(rank, std::vector<long long>(rank, 0));
        for (unsigned i = 0; i < rank; ++i)
            for (unsigned j = 0; j < rank; ++j) {
                long long dot = 0;
                for (unsigned k = 0; k < ambient_dim; ++k)
                    dot += simple_roots[i][k] * simple_roots[j][k];
                if (dot % scale != 0) throw Error("non-integral Gram entry");
                gram[i][j] = dot / scale;
            }
    }

    void build_reflections() {
        reflections.clear();
        for (unsigned i = 0; i < rank; ++i) {
            std::vector<long long> m(rank * rank, 0);
            for (unsigned k = 0; k < rank; ++k) m[k * rank + k] = 1;
            for (unsigned j = 0; j < rank; ++j) m[i * rank + j] -= gram[i][j];
            reflections.push_back(std::move(m));
        }
    }

    // the Gram matrix of a simply-laced type is its Cartan matrix; rebuild
    // the Cartan matrix from the diagram and compare
    void verify_cartan() const {
        std::vector<std::pair<unsigned, unsigned>> edges;
        switch (type) {
            case RootSystemType::A4:
                edges = {{0, 1}, {1, 2}, {2, 3}};
                break;
            case RootSystemType::D5:
                edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
                break;
            case RootSystemType::E6:
                edges = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}};
                break;
            case RootSystemType::E7:
                edges = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}};
                break;
            case RootSystemType::E8:
                edges = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
                break;
        }
        std::vector<std::vector<long long>> cartan(rank, std::vector<long long>(rank, 0));
        for (unsigned i = 0; i < rank; ++i) cartan[i][i] = 2;
        for (auto [a, b] : edges) {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        if (cartan != gram) throw Error("Gram matrix disagrees with the Cartan matrix of " +
                                        type_name(type));
    }
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr root_system(RootSystemType t) { return RootSystem::make(t); }

} // namespace cremona
