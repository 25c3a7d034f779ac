#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "fuss/path_graph.hpp"
#include "fuss/paths.hpp"

namespace {

// Independent regularity check, straight from the definition: count the
// distinct labels, and bucket positions by oriented step pair using a sign
// rule phrased via integer division rather than the residue comparison the
// library uses.
bool oracle_regular(const fuss::IndexPath& path) {
    if (path.p == 0) return true;
    std::set<int> labels(path.idx.begin(), path.idx.end());
    if (labels.size() != path.m * path.p + 1) return false;
    std::map<std::pair<int, int>, int> classes;
    for (unsigned j = 0; j < path.length(); ++j) {
        int a = path.idx[j];
        int b = path.idx[(j + 1) % path.length()];
        bool up = ((j / path.m) % 2) == 0;
        classes[up ? std::make_pair(a, b) : std::make_pair(b, a)]++;
    }
    for (const auto& [key, count] : classes)
        if (count != 2) return false;
    return true;
}

fuss::IndexPath make_path(unsigned m, unsigned p, std::vector<int> idx) {
    fuss::IndexPath path;
    path.m = m;
    path.p = p;
    path.idx = std::move(idx);
    return path;
}

}  // namespace

TEST_CASE("position signs alternate in runs of m") {
    using fuss::spin;
    std::vector<int> m1, m2, m3;
    for (unsigned j = 0; j < 8; ++j) m1.push_back(spin(j, 1));
    for (unsigned j = 0; j < 8; ++j) m2.push_back(spin(j, 2));
    for (unsigned j = 0; j < 6; ++j) m3.push_back(spin(j, 3));
    CHECK(m1 == std::vector<int>{1, -1, 1, -1, 1, -1, 1, -1});
    CHECK(m2 == std::vector<int>{1, 1, -1, -1, 1, 1, -1, -1});
    CHECK(m3 == std::vector<int>{1, 1, 1, -1, -1, -1});
}

TEST_CASE("vertex types rise to m then fall back") {
    using fuss::vertex_type;
    std::vector<unsigned> t2, t3;
    for (unsigned j = 0; j < 8; ++j) t2.push_back(vertex_type(j, 2));
    for (unsigned j = 0; j < 7; ++j) t3.push_back(vertex_type(j, 3));
    CHECK(t2 == std::vector<unsigned>{0, 1, 2, 1, 0, 1, 2, 1});
    CHECK(t3 == std::vector<unsigned>{0, 1, 2, 3, 2, 1, 0});
    // Period 2m: position 2mp has the type of position 0.
    CHECK(vertex_type(12, 3) == 0);
    CHECK(vertex_type(11, 2) == 1);
}

TEST_CASE("edge keys orient by sign and close cyclically") {
    auto path = make_path(2, 2, {1, 2, 3, 2, 4, 2, 5, 2});
    using P = std::pair<int, int>;
    CHECK(fuss::edge_class_key(path, 0) == P{1, 2});
    CHECK(fuss::edge_class_key(path, 1) == P{2, 3});
    CHECK(fuss::edge_class_key(path, 2) == P{2, 3});
    CHECK(fuss::edge_class_key(path, 3) == P{4, 2});
    CHECK(fuss::edge_class_key(path, 4) == P{4, 2});
    CHECK(fuss::edge_class_key(path, 5) == P{2, 5});
    CHECK(fuss::edge_class_key(path, 6) == P{2, 5});
    CHECK(fuss::edge_class_key(path, 7) == P{1, 2});  // closing step wraps to i_0
    CHECK(path.at(8) == 1);
    CHECK_THROWS_AS(fuss::edge_class_key(path, 8), std::out_of_range);
    auto empty = make_path(2, 0, {});
    CHECK_THROWS_AS(fuss::edge_class_key(empty, 0), std::invalid_argument);
}

TEST_CASE("canonical labeling renames by first occurrence") {
    auto path = make_path(1, 2, {7, 3, 7, 9});
    auto canon = fuss::canonicalize(path);
    CHECK(canon.idx == std::vector<int>{1, 2, 1, 3});
    CHECK(fuss::is_canonical(canon));
    CHECK_FALSE(fuss::is_canonical(path));
    CHECK(fuss::canonicalize(canon).idx == canon.idx);
    CHECK(fuss::is_canonical(make_path(1, 2, {1, 2, 3, 2})));
    CHECK_FALSE(fuss::is_canonical(make_path(1, 2, {1, 3, 2, 3})));  // 3 before 2
    CHECK_FALSE(fuss::is_canonical(make_path(1, 1, {2, 1})));
}

TEST_CASE("path lines round trip") {
    auto path = make_path(2, 2, {1, 2, 3, 2, 4, 2, 5, 2});
    auto line = fuss::format_path_line(path);
    CHECK(line == "2 2 1 2 3 2 4 2 5 2");
    auto back = fuss::parse_path_line(line);
    CHECK(back == path);
    CHECK(back.canonical);
    CHECK(fuss::parse_path_line("3 0").length() == 0);
    CHECK_THROWS_AS(fuss::parse_path_line("1 2 1 2 1"), std::invalid_argument);  // 3 of 4 indices
    CHECK_THROWS_AS(fuss::parse_path_line(""), std::invalid_argument);
    CHECK_THROWS_AS(fuss::parse_path_line("0 1 1 1"), std::invalid_argument);
}

TEST_CASE("graph of a regular path: spanning tree with doubled steps") {
    auto path = make_path(2, 2, {1, 2, 3, 2, 4, 2, 5, 2});
    auto g = fuss::build_path_graph(path);
    CHECK(g.vertex_count == 5);
    CHECK(g.edge_classes.size() == 4);
    for (const auto& [key, positions] : g.edge_classes) CHECK(positions.size() == 2);
    CHECK(g.occurrences[1] == std::vector<unsigned>{1, 3, 5, 7});  // hub label 2

    auto cert = fuss::certify(g);
    CHECK(cert.vertex_count_ok);
    CHECK(cert.class_sizes_ok);
    CHECK(cert.tree_ok);
    CHECK(cert.types_ok);
    CHECK(cert.regular());
    CHECK(oracle_regular(path));
}

TEST_CASE("non-regular paths fail the right checks") {
    auto doubled = make_path(1, 2, {1, 2, 1, 2});
    auto cd = fuss::certify(fuss::build_path_graph(doubled));
    CHECK_FALSE(cd.vertex_count_ok);   // 2 labels, need 3
    CHECK_FALSE(cd.class_sizes_ok);    // single class visited four times
    CHECK_FALSE(cd.regular());
    CHECK_FALSE(oracle_regular(doubled));

    auto spread = make_path(1, 2, {1, 2, 3, 4});
    auto cs = fuss::certify(fuss::build_path_graph(spread));
    CHECK_FALSE(cs.vertex_count_ok);   // 4 labels, need 3
    CHECK_FALSE(cs.class_sizes_ok);    // four singleton classes
    CHECK_FALSE(cs.tree_ok);
    CHECK_FALSE(cs.regular());
    CHECK_FALSE(oracle_regular(spread));

    CHECK(fuss::is_regular(make_path(1, 2, {1, 2, 1, 3})));
    CHECK_FALSE(fuss::is_regular(make_path(1, 2, {1, 2, 3, 1})));
}

TEST_CASE("graph construction requires canonical labels") {
    CHECK_THROWS_AS(fuss::build_path_graph(make_path(1, 1, {2, 1})), std::invalid_argument);
    // is_regular canonicalizes internally, so raw labels are fine there.
    CHECK(fuss::is_regular(make_path(1, 1, {5, 9})));
}

TEST_CASE("empty path is regular by convention") {
    auto empty = make_path(3, 0, {});
    auto cert = fuss::certify(fuss::build_path_graph(empty));
    CHECK(cert.regular());
    CHECK(cert.tree_ok);
    CHECK(cert.types_ok);
    CHECK(fuss::is_regular(empty));
    CHECK(oracle_regular(empty));
}
