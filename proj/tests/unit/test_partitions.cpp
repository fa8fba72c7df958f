#include <catch_amalgamated.hpp>

#include <algorithm>

#include "moplab/partitions/partition.hpp"

using namespace moplab;

namespace {
std::vector<int> content_values(const Partition& r) {
  std::vector<int> v;
  for (auto& c : contents(r)) v.push_back(c.value);
  return v;
}
std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("partition parsing and validation", "[partitions]") {
  CHECK(Partition::parse("4,3,2") == Partition{4, 3, 2});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("[2,1]") == Partition{2, 1});
  CHECK_THROWS(Partition::parse("2,3"));
  CHECK_THROWS(Partition::parse("2,,1"));
  CHECK_THROWS(Partition::parse("2,-1"));
  CHECK(Partition{4, 3, 2}.size() == 9);
  CHECK(Partition{4, 3, 2}.length() == 3);
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{2, 1}.str() == "[2,1]");
  CHECK(Partition{}.str() == "[]");
}

TEST_CASE("contents and hooks", "[partitions]") {
  auto c = contents(Partition{2, 1});
  REQUIRE(c.size() == 3);
  CHECK(c[0].row == 1);
  CHECK(c[0].col == 1);
  CHECK(c[0].value == 0);
  CHECK(c[1].value == 1);
  CHECK(c[2].row == 2);
  CHECK(c[2].value == -1);
  CHECK(content_values(Partition{3, 1}) == std::vector<int>{0, 1, 2, -1});
  CHECK(contents(Partition{}).empty());
  CHECK(sorted(hooks(Partition{2, 1})) == std::vector<int>{1, 1, 3});
  CHECK(sorted(hooks(Partition{3, 1})) == std::vector<int>{1, 1, 2, 4});
  CHECK(hooks(Partition{1}) == std::vector<int>{1});
  CHECK(hook_length(Partition{3, 1}, 1, 1) == 4);
}

TEST_CASE("content sum identity", "[partitions][property]") {
  for (int n = 0; n <= 10; ++n)
    for (auto& r : partitions_of(n)) {
      int lhs = 0;
      for (auto& c : contents(r)) lhs += c.value;
      int rhs = 0;
      for (int i = 1; i <= r.length(); ++i) rhs += r.row(i) * (r.row(i) - 1) / 2 - (i - 1) * r.row(i);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("enumeration counts and order", "[partitions]") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == p[n]);
  auto all = partitions_up_to(4);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all[1] == Partition{1});
  CHECK(all[2] == Partition{2});
  CHECK(all[3] == Partition{1, 1});
  CHECK(partitions_of(4, 2).size() == 3);
  auto subs = subpartitions(Partition{2, 1});
  CHECK(subs.size() == 5);
  CHECK(dominated_by(Partition{2, 1, 1}, Partition{2, 2}));
  CHECK_FALSE(dominated_by(Partition{3}, Partition{2, 1}));
}

TEST_CASE("xi content products", "[partitions]") {
  ParamScalar z = ParamScalar::symbol("z");
  ParamScalar n = ParamScalar::symbol("N");
  CHECK(xi(Partition{1}, z) == z);
  CHECK(xi(Partition{2, 1}, z) == z * (z + 1) * (z - 1));
  CHECK(xi(Partition{4}, n) == n * (n + 1) * (n + 2) * (n + 3));
  CHECK(xi_ratio(Partition{2}, Partition{1}, z, false) == z + 1);
  CHECK(xi_ratio(Partition{2}, Partition{1}, z, true) == z - 1);
  CHECK(xi_ratio(Partition{1}, Partition{1}, z, true) == ParamScalar(1));
  CHECK_THROWS_AS(xi_ratio(Partition{1}, Partition{2}, z, false), NotContained);
  int zid = symbol_id("z");
  for (int k = 0; k <= 6; ++k)
    for (auto& r : partitions_of(k)) {
      ParamPoly p = xi(r, z).numerator();
      CHECK(p.degree_in(zid) == k);
      for (auto& q : subpartitions(r))
        for (bool t : {false, true})
          CHECK(xi_ratio(r, q, z, t) * xi_ratio(q, Partition{}, z, t) == xi_ratio(r, Partition{}, z, t));
    }
}

TEST_CASE("restricted size, bracket, row interaction", "[partitions]") {
  CHECK(restricted_size(Partition{6, 3}, Partition{2}) == 2);
  CHECK(restricted_size(Partition{4, 3, 2}, Partition{4, 3, 2}) == 0);
  CHECK(restricted_size(Partition{4, 3, 2}, Partition{2, 1}) == 3);
  CHECK(restricted_size(Partition{3, 2}, Partition{3, 1}) == 1);
  CHECK_THROWS_AS(restricted_size(Partition{1}, Partition{2}), NotContained);
  CHECK(bracket(4, 2, 0) == 4);
  CHECK(bracket(3, 2, 0) == 1);
  CHECK(bracket(0, 2, 0) == 0);
  CHECK(rows_interact(Partition{3, 2, 1}, Partition{2, 1}));
  CHECK_FALSE(rows_interact(Partition{4, 1}, Partition{}));
  CHECK(rows_interact(Partition{2, 2}, Partition{2}));
  CHECK_FALSE(rows_interact(Partition{3, 2, 1}, Partition{2, 1}, RowsConvention::Geometric));
  CHECK(rows_interact(Partition{4, 1}, Partition{}, RowsConvention::Geometric));
  CHECK_FALSE(rows_interact(Partition{2, 2}, Partition{2}, RowsConvention::Geometric));
}
