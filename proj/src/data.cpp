#include "mensura/data.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mensura/format.hpp"
#include "mensura/regress.hpp"

namespace mensura {

namespace {

struct SourceRow {
    double dbh_in;
    double height_ft;
    double volume_ft3;
};

// Meyer's Table 32, verbatim: diameter at breast height in inches, total
// height in feet, measured stem volume in cubic feet.
constexpr std::array<SourceRow, 31> kCherrySource = {{
    {8.3, 70.0, 10.3},  {8.6, 65.0, 10.3},  {8.8, 63.0, 10.2},  {10.5, 72.0, 16.4},
    {10.7, 81.0, 18.8}, {10.8, 83.0, 19.7}, {11.0, 66.0, 15.6}, {11.0, 75.0, 18.2},
    {11.1, 80.0, 22.6}, {11.2, 75.0, 19.9}, {11.3, 79.0, 24.2}, {11.4, 76.0, 21.0},
    {11.4, 76.0, 21.4}, {11.7, 69.0, 21.3}, {12.0, 75.0, 19.1}, {12.9, 74.0, 22.2},
    {12.9, 85.0, 33.8}, {13.3, 86.0, 27.4}, {13.7, 71.0, 25.7}, {13.8, 64.0, 24.9},
    {14.0, 78.0, 34.5}, {14.2, 80.0, 31.7}, {14.5, 74.0, 36.3}, {16.0, 72.0, 38.3},
    {16.3, 77.0, 42.6}, {17.3, 81.0, 55.4}, {17.5, 82.0, 55.7}, {17.9, 80.0, 58.3},
    {18.0, 80.0, 51.5}, {18.0, 80.0, 51.0}, {20.6, 87.0, 77.0},
}};

void validate_record(const TreeRecord& r, const std::string& context) {
    if (!(r.dbh_ft > 0.0) || !(r.height_ft > 0.0) || !(r.volume_ft3 > 0.0))
        throw DataError(context + ": all measurements must be positive (row " +
                        std::to_string(r.id) + ")");
}

}  // namespace

Dataset::Dataset(std::string name, std::vector<TreeRecord> records, SourceUnits source_units)
    : name_(std::move(name)),
      records_(std::move(records)),
      source_units_(std::move(source_units)) {
    if (records_.empty()) throw DataError("dataset '" + name_ + "' is empty");
    for (std::size_t i = 0; i < records_.size(); ++i) {
        if (records_[i].id != static_cast<int>(i) + 1)
            throw DataError("dataset '" + name_ + "' has non-sequential record ids");
        validate_record(records_[i], name_);
    }
}

std::vector<double> Dataset::dbh_ft() const {
    std::vector<double> v;
    v.reserve(records_.size());
    for (const TreeRecord& r : records_) v.push_back(r.dbh_ft);
    return v;
}

std::vector<double> Dataset::height_ft() const {
    std::vector<double> v;
    v.reserve(records_.size());
    for (const TreeRecord& r : records_) v.push_back(r.height_ft);
    return v;
}

std::vector<double> Dataset::volume_ft3() const {
    std::vector<double> v;
    v.reserve(records_.size());
    for (const TreeRecord& r : records_) v.push_back(r.volume_ft3);
    return v;
}

Dataset cherry_dataset() {
    const Unit in = lookup_unit("in");
    const Unit ft = lookup_unit("ft");
    const Unit ft3 = lookup_unit("ft3");
    std::vector<TreeRecord> records;
    records.reserve(kCherrySource.size());
    int id = 1;
    for (const SourceRow& row : kCherrySource)
        records.push_back({id++, convert(row.dbh_in, in, ft), row.height_ft, row.volume_ft3});
    return Dataset("cherry", std::move(records), SourceUnits{in, ft, ft3});
}

std::uint64_t cherry_source_digest() {
    std::uint64_t h = 14695981039346656037ull;
    const auto mix = [&h](const char* data, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            h ^= static_cast<unsigned char>(data[i]);
            h *= 1099511628211ull;
        }
    };
    char buf[64];
    for (const SourceRow& row : kCherrySource) {
        const int n = std::snprintf(buf, sizeof(buf), "%.1f,%.1f,%.1f\n", row.dbh_in,
                                    row.height_ft, row.volume_ft3);
        mix(buf, static_cast<std::size_t>(n));
    }
    return h;
}

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

double parse_cell(const std::string& cell, int row, const char* column) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != cell.size() || cell.empty())
        throw DataError("non-numeric " + std::string(column) + " value '" + cell +
                        "' in data row " + std::to_string(row));
    return v;
}

}  // namespace

Dataset load_csv(std::istream& in, const std::string& name, const SourceUnits& units) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("CSV '" + name + "' is empty");
    if (strip_cr(line) != "dbh,height,volume")
        throw DataError("CSV '" + name + "' must start with header 'dbh,height,volume', got '" +
                        strip_cr(line) + "'");

    const Unit ft = lookup_unit("ft");
    const Unit ft3 = lookup_unit("ft3");
    std::vector<TreeRecord> records;
    int row = 1;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        if (cells.size() != 3)
            throw DataError("data row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " columns, expected 3");
        TreeRecord r;
        r.id = row;
        r.dbh_ft = convert(parse_cell(cells[0], row, "dbh"), units.dbh, ft);
        r.height_ft = convert(parse_cell(cells[1], row, "height"), units.height, ft);
        r.volume_ft3 = convert(parse_cell(cells[2], row, "volume"), units.volume, ft3);
        records.push_back(r);
        ++row;
    }
    if (records.empty()) throw DataError("CSV '" + name + "' has a header but no data rows");
    return Dataset(name, std::move(records), units);
}

Dataset load_csv(const std::filesystem::path& path, const SourceUnits& units) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open CSV file '" + path.string() + "'");
    return load_csv(in, path.stem().string(), units);
}

void write_csv(const Dataset& ds, std::ostream& out, const SourceUnits& units) {
    const Unit ft = lookup_unit("ft");
    const Unit ft3 = lookup_unit("ft3");
    out << "dbh,height,volume\n";
    for (const TreeRecord& r : ds.records())
        out << fmt_double(convert(r.dbh_ft, ft, units.dbh)) << ','
            << fmt_double(convert(r.height_ft, ft, units.height)) << ','
            << fmt_double(convert(r.volume_ft3, ft3, units.volume)) << '\n';
}

DatasetSummary summary(const Dataset& ds) {
    const std::vector<double> d = ds.dbh_ft();
    const std::vector<double> h = ds.height_ft();
    const std::vector<double> v = ds.volume_ft3();
    DatasetSummary s;
    s.count = ds.size();
    double sd = 0.0, sh = 0.0, sv = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        sd += d[i];
        sh += h[i];
        sv += v[i];
    }
    s.mean_dbh_ft = sd / ds.size();
    s.mean_height_ft = sh / ds.size();
    s.mean_volume_ft3 = sv / ds.size();
    if (ds.size() >= 2) {
        s.corr_dh = pearson(d, h);
        s.corr_dv = pearson(d, v);
        s.corr_hv = pearson(h, v);
    } else {
        s.corr_dh = s.corr_dv = s.corr_hv = 0.0;
    }
    return s;
}

}  // namespace mensura
