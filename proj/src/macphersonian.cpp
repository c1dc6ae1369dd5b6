#include "positroid/macphersonian.hpp"

#include <string>

#include "positroid/enumerate.hpp"
#include "positroid/positroid.hpp"

namespace positroid {

bool specializes(const Chirotope& chi, const Chirotope& weaker) {
    if (chi.n() != weaker.n() || chi.d() != weaker.d())
        throw shape_mismatch("specialization needs matching n and d");
    const std::int64_t count = binom(chi.n(), chi.d());
    for (int global = 1; global >= -1; global -= 2) {
        bool ok = true;
        for (std::int64_t r = 0; r < count && ok; ++r) {
            const int w = weaker.signs()[r];
            if (w != 0 && chi.signs()[r] != global * w) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

namespace {

std::string basis_label(const Matroid& m) {
    std::string s;
    for (Mask b : m.bases()) {
        if (!s.empty()) s += "|";
        bool first = true;
        for (int e : elements(b)) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        if (b == 0) s += "-";
    }
    return s;
}

MacphersonianPlus assemble(int k, int n, std::vector<Chirotope> elems) {
    MacphersonianPlus out;
    out.k = k;
    out.n = n;
    out.elements = std::move(elems);
    std::vector<std::string> labels;
    for (const Chirotope& chi : out.elements) {
        out.matroids.push_back(chi.underlying_matroid());
        labels.push_back(basis_label(out.matroids.back()));
    }
    const int m = static_cast<int>(out.elements.size());
    std::vector<std::vector<std::uint8_t>> leq(m, std::vector<std::uint8_t>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            leq[i][j] = specializes(out.elements[j], out.elements[i]) ? 1 : 0;
    out.poset = Poset::with_bottom(std::move(labels), std::move(leq));
    return out;
}

}  // namespace

bool MacphersonianPlus::containment_leq(int x, int y) const {
    if (x == 0) return true;
    if (y == 0) return false;
    for (Mask b : matroids[x - 1].bases())
        if (!matroids[y - 1].is_basis(b)) return false;
    return true;
}

bool MacphersonianPlus::orders_coincide() const {
    for (int x = 0; x < poset.size(); ++x)
        for (int y = 0; y < poset.size(); ++y)
            if (poset.leq(x, y) != containment_leq(x, y)) return false;
    return true;
}

MacphersonianPlus build_macphersonian_plus(int k, int n) {
    std::vector<Chirotope> elems;
    for (const Matroid& m : enumerate_matroids(n, k))
        if (auto chi = indicator_chirotope(m)) elems.push_back(std::move(*chi));
    return assemble(k, n, std::move(elems));
}

MacphersonianPlus build_macphersonian_plus_reorientation_closed(int k, int n) {
    std::vector<Chirotope> elems;
    for (Chirotope& chi : enumerate_chirotopes(n, k))
        if (is_positively_orientable(chi)) elems.push_back(std::move(chi));
    return assemble(k, n, std::move(elems));
}

}  // namespace positroid
