#include "hcn/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hcn {

std::string default_fixture_dir() {
#ifdef HCN_DEFAULT_DATA_DIR
    return HCN_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

i64 parse_int(const std::string& s, const std::string& where) {
    std::size_t used = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::logic_error&) {
        throw std::runtime_error(where + ": not an integer '" + s + "'");
    }
    if (used != s.size()) throw std::runtime_error(where + ": not an integer '" + s + "'");
    return v;
}

}  // namespace

std::vector<FixtureRow> load_fixture_csv(const std::string& path, const std::string& key_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string expected = key_column + ",level,num,den";
    if (line != expected) throw std::runtime_error(path + ": expected header '" + expected + "'");
    std::vector<FixtureRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        auto cells = split_csv(line);
        if (cells.size() != 4) throw std::runtime_error(where + ": expected 4 columns");
        FixtureRow r;
        r.key = parse_int(cells[0], where);
        r.level = parse_int(cells[1], where);
        i64 den = parse_int(cells[3], where);
        if (den <= 0) throw std::runtime_error(where + ": denominator must be positive");
        r.value = ExactRational(parse_int(cells[2], where), den);
        rows.push_back(std::move(r));
    }
    return rows;
}

FixtureSet load_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error("fixture directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    FixtureSet set;
    for (const auto& p : files) {
        const std::string name = p.filename().string();
        if (name.rfind("table1", 0) == 0 || name.rfind("table2", 0) == 0) {
            auto rows = load_fixture_csv(p.string(), "disc");
            set.class_numbers.insert(set.class_numbers.end(), rows.begin(), rows.end());
        } else if (name.rfind("table5", 0) == 0 || name.rfind("table6", 0) == 0) {
            auto rows = load_fixture_csv(p.string(), "n");
            set.sums.insert(set.sums.end(), rows.begin(), rows.end());
        }
    }
    if (set.class_numbers.empty() && set.sums.empty())
        throw std::runtime_error("no fixture tables found in " + dir);
    return set;
}

}  // namespace hcn
