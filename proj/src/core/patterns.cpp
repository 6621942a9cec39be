#include "core/patterns.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cpk {

namespace {

int wrap(int c, int n) { return (c - 1 + n) % n + 1; }   // back to 1..n

bool adjacent(int u, int v, int n) {
    int d = (u - v + n) % n;
    return d == 1 || d == n - 1;
}

// Endpoint count of chord (q1,q2) strictly inside the arc from p1 to p2.
bool chords_cross(int p1, int p2, int q1, int q2, int n) {
    auto inside = [&](int q) {
        int arc = (p2 - p1 + n) % n;
        int off = (q - p1 + n) % n;
        return off > 0 && off < arc;
    };
    return inside(q1) != inside(q2);
}

} // namespace

std::vector<int> vertex_word(const SidePairing& p) {
    std::vector<int> w(p.sides);
    for (int s = 1; s <= p.sides; ++s) w[s - 1] = p.side_label[s];
    return w;
}

SidePairing build_pattern(int genus, const std::vector<std::pair<int, int>>& pairing,
                          std::string name) {
    if (genus < 1) fail("genus-mismatch", "genus must be at least 1");
    const int sides = 12 * genus - 6;
    if (static_cast<int>(pairing.size()) * 2 != sides) {
        std::ostringstream os;
        os << "expected " << sides / 2 << " side pairs for genus " << genus << ", got "
           << pairing.size();
        fail("genus-mismatch", os.str());
    }

    SidePairing p;
    p.genus = genus;
    p.sides = sides;
    p.name = std::move(name);
    p.mu.assign(sides + 1, 0);
    for (auto [u, v] : pairing) {
        if (u < 1 || u > sides || v < 1 || v > sides || u == v)
            fail("not-an-involution", "side index out of range or self-paired");
        if (p.mu[u] != 0 || p.mu[v] != 0)
            fail("not-an-involution", "side appears in more than one pair");
        p.mu[u] = v;
        p.mu[v] = u;
    }
    for (int s = 1; s <= sides; ++s)
        if (p.mu[s] == 0) fail("not-an-involution", "unpaired side");

    // Corner cycles: orbits of sigma(c) = mu(c)+1 must all have length 3.
    std::vector<char> seen(sides + 1, 0);
    for (int c = 1; c <= sides; ++c) {
        if (seen[c]) continue;
        std::vector<int> orbit{c};
        int cur = c;
        while (true) {
            cur = wrap(p.mu[cur] + 1, sides);
            if (cur == c) break;
            orbit.push_back(cur);
            if (static_cast<int>(orbit.size()) > 3) break;
        }
        if (orbit.size() != 3) {
            std::ostringstream os;
            os << "corner cycle through corner " << c << " has length " << orbit.size()
               << " (";
            for (std::size_t t = 0; t < orbit.size(); ++t)
                os << (t ? "," : "") << orbit[t];
            os << "), expected 3";
            fail("corner-cycle", os.str());
        }
        for (int m : orbit) seen[m] = 1;
        p.corners.push_back({orbit[0], orbit[1], orbit[2]});
    }
    std::sort(p.corners.begin(), p.corners.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    // Edge labels in first-occurrence order along the boundary.
    p.side_label.assign(sides + 1, 0);
    int next = 0;
    for (int s = 1; s <= sides; ++s) {
        if (p.side_label[s] != 0) continue;
        ++next;
        p.side_label[s] = next;
        p.side_label[p.mu[s]] = next;
    }
    return p;
}

TripleKind classify_triple(const SidePairing& p, const std::array<int, 3>& corner) {
    bool found = false;
    for (const auto& c : p.corners)
        if (std::is_permutation(c.begin(), c.end(), corner.begin())) found = true;
    if (!found) fail("corner-cycle", "corner cycle does not belong to the pattern");

    const int n = p.sides;
    std::array<std::pair<int, int>, 3> pairs;
    for (int t = 0; t < 3; ++t) pairs[t] = {corner[t], p.mu[corner[t]]};

    int crossings = 0;
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
            if (chords_cross(pairs[s].first, pairs[s].second, pairs[t].first,
                             pairs[t].second, n))
                ++crossings;
    if (crossings == 3) return TripleKind::Separating;
    if (crossings == 0) return TripleKind::Nonseparating;
    fail("corner-cycle", "inconsistent chord crossings for a corner triple");
}

namespace {

std::vector<int> encode(const std::vector<int>& mu, int n) {
    return std::vector<int>(mu.begin() + 1, mu.begin() + n + 1);
}

// Relabeled pairing g . mu . g^-1 for a permutation given as forward map.
std::vector<int> relabel(const std::vector<int>& mu, int n, auto&& fwd, auto&& inv) {
    std::vector<int> out(n + 1, 0);
    for (int c = 1; c <= n; ++c) out[c] = fwd(mu[inv(c)]);
    return out;
}

} // namespace

SidePairing canonical_pattern(const SidePairing& p) {
    const int n = p.sides;
    std::vector<int> best;
    for (int refl = 0; refl < 2; ++refl) {
        for (int t = 0; t < n; ++t) {
            auto fwd = [&](int c) {
                if (refl) c = n + 1 - c;
                return wrap(c + t, n);
            };
            auto inv = [&](int c) {
                c = wrap(c - t, n);
                if (refl) c = n + 1 - c;
                return c;
            };
            auto mu2 = relabel(p.mu, n, fwd, inv);
            auto enc = encode(mu2, n);
            if (best.empty() || enc < best) best = enc;
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int c = 1; c <= n; ++c)
        if (c < best[c - 1]) pairs.push_back({c, best[c - 1]});
    return build_pattern(p.genus, pairs, p.name);
}

namespace {

struct Search {
    int n;
    std::vector<int> mu;
    std::vector<std::vector<int>>* out;

    bool assign(int u, int v, std::vector<int>& touched) {
        if (u == v || adjacent(u, v, n)) return false;
        if (mu[u] == v && mu[v] == u) return true;
        if (mu[u] != 0 || mu[v] != 0) return false;
        mu[u] = v;
        mu[v] = u;
        touched.push_back(u);
        touched.push_back(v);
        // Closure: mu(c)=d and mu(c+1)=e force mu(e+1)=d-1.
        for (int a : {u, v})
            for (int c : {wrap(a - 1, n), a}) {
                int d = mu[c], e = mu[wrap(c + 1, n)];
                if (d == 0 || e == 0) continue;
                if (!assign(wrap(e + 1, n), wrap(d - 1, n), touched)) return false;
            }
        return true;
    }

    void rollback(std::vector<int>& touched, std::size_t from) {
        while (touched.size() > from) {
            mu[touched.back()] = 0;
            touched.pop_back();
        }
    }

    void run(std::vector<int>& touched) {
        int c = 0;
        for (int s = 1; s <= n; ++s)
            if (mu[s] == 0) {
                c = s;
                break;
            }
        if (c == 0) {
            out->push_back(mu);
            return;
        }
        for (int d = c + 1; d <= n; ++d) {
            if (mu[d] != 0 || adjacent(c, d, n)) continue;
            std::size_t mark = touched.size();
            if (assign(c, d, touched)) run(touched);
            rollback(touched, mark);
        }
    }
};

} // namespace

std::vector<SidePairing> enumerate_patterns(int genus) {
    if (genus < 1) fail("genus-mismatch", "genus must be at least 1");
    const int n = 12 * genus - 6;

    std::vector<std::vector<int>> raw;
    Search search{n, std::vector<int>(n + 1, 0), &raw};
    std::vector<int> touched;
    search.run(touched);

    std::set<std::vector<int>> canon;
    for (const auto& mu : raw) {
        std::vector<std::pair<int, int>> pairs;
        for (int c = 1; c <= n; ++c)
            if (c < mu[c]) pairs.push_back({c, mu[c]});
        SidePairing p = build_pattern(genus, pairs);
        canon.insert(encode(canonical_pattern(p).mu, n));
    }

    std::vector<SidePairing> result;
    int idx = 0;
    for (const auto& enc : canon) {
        ++idx;
        std::vector<std::pair<int, int>> pairs;
        for (int c = 1; c <= n; ++c)
            if (c < enc[c - 1]) pairs.push_back({c, enc[c - 1]});
        std::ostringstream os;
        os << "g" << genus << "-" << idx;
        result.push_back(build_pattern(genus, pairs, os.str()));
    }
    return result;
}

namespace {

EdgeLayout layout_from_start(const SidePairing& p, int c1, int c2, int c3) {
    const int n = p.sides;
    EdgeLayout lay;
    lay.rotation = c1 - 1;
    lay.j = (c2 - c1 + n) % n;
    lay.i = (c3 - c1 + n) % n + 1;
    if (lay.j < 3 || lay.i - lay.j < 4 || lay.i > n - 2)
        fail("degenerate-layout",
             "dependent triple has an empty gap word; the pattern is not a valid "
             "one-vertex triangulation layout");
    lay.word.resize(n);
    for (int pos = 1; pos <= n; ++pos)
        lay.word[pos - 1] = p.side_label[wrap(pos + lay.rotation, n)];
    lay.x_label = p.side_label[c1];
    lay.y_label = p.side_label[c2];
    lay.z_label = p.side_label[c3];
    for (int lbl = 1; lbl <= p.edge_count(); ++lbl)
        if (lbl != lay.x_label && lbl != lay.y_label && lbl != lay.z_label)
            lay.free_labels.push_back(lbl);
    // The rotated word must read x T x y U y z V z.
    bool ok = lay.word[0] == lay.x_label && lay.word[lay.j - 1] == lay.x_label &&
              lay.word[lay.j] == lay.y_label && lay.word[lay.i - 2] == lay.y_label &&
              lay.word[lay.i - 1] == lay.z_label && lay.word[n - 1] == lay.z_label;
    if (!ok) fail("corner-cycle", "internal: layout rotation does not match the vertex word");
    return lay;
}

} // namespace

EdgeLayout select_dependent_triple(const SidePairing& p) {
    if (p.genus < 2)
        fail("genus-mismatch", "dependent triple selection requires genus >= 2");
    for (const auto& corner : p.corners) {
        if (classify_triple(p, corner) != TripleKind::Nonseparating) continue;
        return layout_from_start(p, corner[0], corner[1], corner[2]);
    }
    fail("corner-cycle", "internal: no non-separating corner cycle found");
}

std::optional<EdgeLayout> layout_for_labels(const SidePairing& p, int lx, int ly, int lz) {
    if (p.genus < 2) return std::nullopt;
    for (const auto& corner : p.corners) {
        if (classify_triple(p, corner) != TripleKind::Nonseparating) continue;
        for (int s = 0; s < 3; ++s) {
            int c1 = corner[s], c2 = corner[(s + 1) % 3], c3 = corner[(s + 2) % 3];
            if (p.side_label[c1] == lx && p.side_label[c2] == ly && p.side_label[c3] == lz)
                return layout_from_start(p, c1, c2, c3);
        }
    }
    return std::nullopt;
}

} // namespace cpk
