#include <doctest.h>

#include <numeric>
#include <regex>

#include "czekan/render.hpp"
#include "test_util.hpp"

using namespace czekan;

namespace {

Permutation identity(std::size_t n) {
    Permutation pi;
    pi.order.resize(n);
    std::iota(pi.order.begin(), pi.order.end(), 0);
    return pi;
}

CzekMatrix small_czek(std::size_t n, int n_classes, Rng& rng) {
    const DistanceMatrix w = czekan::test::random_distance_matrix(rng, n);
    return czek_symmetric(w, identity(n), n_classes);
}

// Minimal well-formedness check: tags balance, attributes are quoted.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        const std::size_t end = text.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        const bool closing = tag[0] == '/';
        const bool self_closing = tag.back() == '/';
        if (closing) {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            continue;
        }
        const std::size_t name_end = tag.find_first_of(" \t\n/");
        const std::string name = tag.substr(0, name_end);
        // Quotes must pair up inside the tag.
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (!self_closing) stack.push_back(name);
    }
    return stack.empty();
}

struct Rect {
    double x, y, w, h;
};

std::vector<Rect> shade_rects(const std::string& svg) {
    std::vector<Rect> rects;
    std::regex pattern("<rect class=\"cluster-shade\" x=\"([0-9.]+)\" y=\"([0-9.]+)\" "
                       "width=\"([0-9.]+)\" height=\"([0-9.]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pattern);
         it != std::sregex_iterator(); ++it)
        rects.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3]),
                         std::stod((*it)[4])});
    return rects;
}

int count_circles(const std::string& svg) {
    std::regex pattern("<circle ");
    return static_cast<int>(std::distance(
        std::sregex_iterator(svg.begin(), svg.end(), pattern), std::sregex_iterator()));
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("single observation: one largest dot, valid svg") {
    CzekMatrix czek;
    czek.classes = IntMatrix(1, 1, 1);
    czek.permutation = identity(1);
    czek.n_classes = 5;
    test::TempDir dir("svg");
    const std::string path = dir.file("one.svg");
    render_svg(czek, std::nullopt, {}, path);
    const std::string svg = test::read_file(path);
    CHECK(xml_well_formed(svg));
    CHECK(count_circles(svg) == 1);
    CHECK(svg.find("r=\"5.40\"") != std::string::npos);  // 0.45 * 12 px
}

TEST_CASE("two clusters shade two diagonal blocks matching the intervals") {
    Rng rng(7);
    const std::size_t n = 10;
    const CzekMatrix czek = small_czek(n, 5, rng);
    ClusterResult clusters;
    clusters.intervals = {{1, 4}, {5, 10}};
    clusters.k_found = 2;
    clusters.k_requested = 2;

    test::TempDir dir("svg");
    DiagramStyle style;
    const std::string path = dir.file("two.svg");
    render_svg(czek, clusters, style, path);
    const std::string svg = test::read_file(path);
    CHECK(xml_well_formed(svg));

    const auto rects = shade_rects(svg);
    REQUIRE(rects.size() == 2);
    const double margin = 4.0, cell = style.cell_px;
    CHECK(rects[0].x == doctest::Approx(margin));
    CHECK(rects[0].w == doctest::Approx(4 * cell));
    CHECK(rects[1].x == doctest::Approx(margin + 4 * cell));
    CHECK(rects[1].w == doctest::Approx(6 * cell));
    for (const auto& rect : rects) {
        CHECK(rect.x == doctest::Approx(rect.y));  // diagonal blocks
        CHECK(rect.w == doctest::Approx(rect.h));
    }
    // Non-overlapping along the diagonal.
    CHECK(rects[0].x + rects[0].w <= rects[1].x + 1e-9);
}

TEST_CASE("symmetric input draws mirrored dot sizes") {
    Rng rng(13);
    const std::size_t n = 6;
    const CzekMatrix czek = small_czek(n, 4, rng);
    test::TempDir dir("svg");
    const std::string path = dir.file("sym.svg");
    render_svg(czek, std::nullopt, {}, path);
    const std::string svg = test::read_file(path);

    std::regex pattern("<circle cx=\"([0-9.]+)\" cy=\"([0-9.]+)\" r=\"([0-9.]+)\"");
    std::map<std::pair<std::string, std::string>, std::string> radius_at;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pattern);
         it != std::sregex_iterator(); ++it)
        radius_at[{(*it)[1], (*it)[2]}] = (*it)[3];
    for (const auto& [key, radius] : radius_at) {
        const auto mirrored = radius_at.find({key.second, key.first});
        REQUIRE(mirrored != radius_at.end());
        CHECK(mirrored->second == radius);
    }
}

TEST_CASE("dot count is n^2 minus blank-class cells") {
    Rng rng(17);
    const std::size_t n = 8;
    const CzekMatrix czek = small_czek(n, 5, rng);
    int blanks = 0;
    for (int v : czek.classes.data())
        if (v == 5) ++blanks;
    test::TempDir dir("svg");
    const std::string path = dir.file("count.svg");
    render_svg(czek, std::nullopt, {}, path);
    CHECK(count_circles(test::read_file(path)) == static_cast<int>(n * n) - blanks);
}

TEST_CASE("style validation") {
    Rng rng(19);
    const CzekMatrix czek = small_czek(4, 3, rng);
    test::TempDir dir("svg");
    DiagramStyle style;
    style.radii = {3.0, 3.0, 1.0};  // not strictly decreasing
    CHECK_THROWS_AS(render_svg(czek, std::nullopt, style, dir.file("bad.svg")), Error);
    style.radii = {3.0, 2.0};  // wrong count
    CHECK_THROWS_AS(render_svg(czek, std::nullopt, style, dir.file("bad.svg")), Error);
    CHECK_THROWS_AS(render_svg(czek, std::nullopt, {}, "/nonexistent-dir/x.svg"), Error);
}

TEST_CASE("ascii: all class 1 renders solid dots") {
    CzekMatrix czek;
    czek.classes = IntMatrix(2, 2, 1);
    czek.permutation = identity(2);
    czek.n_classes = 3;
    CHECK(render_ascii(czek) == "●●\n●●\n");
}

TEST_CASE("ascii ramp is limited to five classes") {
    CzekMatrix czek;
    czek.classes = IntMatrix(2, 2, 1);
    czek.permutation = identity(2);
    czek.n_classes = 6;
    CHECK_THROWS_AS(render_ascii(czek), Error);
}

TEST_CASE("ascii draws separators after interval boundaries") {
    CzekMatrix czek;
    czek.classes = IntMatrix(4, 4, 1);
    czek.permutation = identity(4);
    czek.n_classes = 2;
    ClusterResult clusters;
    clusters.intervals = {{1, 2}, {3, 4}};
    const std::string art = render_ascii(czek, clusters);
    // Row: two cells, separator, two cells.
    CHECK(art.find("●●|●●\n") != std::string::npos);
    CHECK(art.find("--+--\n") != std::string::npos);
    // Separator line sits after the second row.
    const auto first_sep = art.find("--+--");
    const auto first_rows = art.substr(0, first_sep);
    CHECK(std::count(first_rows.begin(), first_rows.end(), '\n') == 2);
}

TEST_CASE("ascii size guard") {
    CzekMatrix czek;
    czek.classes = IntMatrix(201, 201, 1);
    czek.permutation = identity(201);
    czek.n_classes = 2;
    CHECK_THROWS_AS(render_ascii(czek), Error);
}

}  // TEST_SUITE
