#include "concord/library.hpp"

#include <algorithm>
#include <cctype>

namespace concord {

SeifertMatrix knot_from_factor(const LaurentPoly& f) {
    std::vector<Int> c = f.dense();
    std::size_t g = c.size() - 1;
    if (g == 0 || c[0] == 0) fail("factor must have nonzero constant term and positive degree");
    IMat m = IMat::identity(g);
    m(g - 1, g - 1) = c[g];
    IMat y(g, g);
    for (std::size_t i = 1; i < g; ++i) y(i, i - 1) = 1;
    for (std::size_t i = 0; i < g; ++i) y(i, g - 1) = -c[i];
    IMat a(2 * g, 2 * g);
    a.set_block(0, g, m);
    a.set_block(g, 0, y.transpose());
    return SeifertMatrix(a);
}

LaurentPoly terasaka_factor() {
    return LaurentPoly::from_coeffs({4, -3, 2, 4, -7, 1, 2, -3, 1});
}

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

SeifertMatrix bundled_matrix(const std::string& name) {
    std::string key = lower(name);
    if (key == "b1")
        return SeifertMatrix(IMat{{0, 0, 1, 1}, {0, 0, 0, 1}, {1, 1, 0, 1}, {0, 1, 0, 0}});
    if (key == "b2" || key == "trefoil") return SeifertMatrix(IMat{{1, 1}, {0, 1}});
    if (key == "b3")
        return SeifertMatrix(IMat{{1, 0, 0, 0, 1, 0},
                                  {-1, 1, 0, 1, 0, 1},
                                  {0, 0, 0, 1, 1, 1},
                                  {0, 1, 0, 1, 0, 1},
                                  {1, 0, 1, 0, 1, 1},
                                  {0, 1, 1, 1, 0, 1}});
    if (key == "figureeight") return SeifertMatrix(IMat{{1, 1}, {0, -1}});
    if (key == "unknot") return SeifertMatrix(IMat(0, 0));
    if (key == "stabilizedunknot") return SeifertMatrix(IMat{{0, 1}, {0, 0}});
    if (key == "phi30square") return knot_from_factor(cyclotomic(30));
    if (key == "doubledtwist") return knot_from_factor(LaurentPoly::from_coeffs({-2, 5, -2}));
    if (key == "terasaka") return knot_from_factor(terasaka_factor());
    fail("unknown bundled matrix: " + name);
}

const std::vector<std::string>& bundled_names() {
    static const std::vector<std::string> names = {
        "B1",     "B2",          "B3",          "DoubledTwist", "FigureEight",
        "Unknot", "Phi30Square", "StabilizedUnknot", "Terasaka", "Trefoil"};
    return names;
}

}  // namespace concord
