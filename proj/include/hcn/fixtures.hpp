#pragma once

#include "hcn/arith.hpp"
#include "hcn/rational.hpp"

#include <string>
#include <vector>

namespace hcn {

// One cell of a golden table: key is D for class numbers, N for sums. Level 1 is classical.
struct FixtureRow {
    i64 key = 0;
    i64 level = 0;
    ExactRational value;
};

struct FixtureSet {
    std::vector<FixtureRow> class_numbers;  // header disc,level,num,den
    std::vector<FixtureRow> sums;           // header n,level,num,den
};

// Bundled data directory baked in at build time.
std::string default_fixture_dir();

// Reads a CSV with the given first header column ("disc" or "n").
std::vector<FixtureRow> load_fixture_csv(const std::string& path, const std::string& key_column);

// Loads every table1*/table2* (class numbers) and table5*/table6* (sums) CSV in dir.
FixtureSet load_fixtures(const std::string& dir);

}  // namespace hcn
