#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mensura/units.hpp"

namespace mensura {

// One felled tree, measurements in canonical units.
struct TreeRecord {
    int id;  // 1-based row index in source order
    double dbh_ft;
    double height_ft;
    double volume_ft3;
};

struct SourceUnits {
    Unit dbh;
    Unit height;
    Unit volume;
};

class Dataset {
public:
    Dataset(std::string name, std::vector<TreeRecord> records, SourceUnits source_units);

    const std::string& name() const { return name_; }
    const std::vector<TreeRecord>& records() const { return records_; }
    const SourceUnits& source_units() const { return source_units_; }
    std::size_t size() const { return records_.size(); }

    std::vector<double> dbh_ft() const;
    std::vector<double> height_ft() const;
    std::vector<double> volume_ft3() const;

private:
    std::string name_;
    std::vector<TreeRecord> records_;
    SourceUnits source_units_;
};

struct DatasetSummary {
    std::size_t count;
    double mean_dbh_ft;
    double mean_height_ft;
    double mean_volume_ft3;
    double corr_dh;
    double corr_dv;
    double corr_hv;
};

// The 31 felled black cherry trees from the Allegheny National Forest
// (Meyer 1953, Table 32). Source diameters are in inches and convert to
// feet on access.
Dataset cherry_dataset();

// FNV-1a over the source table serialized one row per line as
// "dbh_in,height_ft,volume_ft3" with one decimal each; pins the embedded
// data against accidental edits.
std::uint64_t cherry_source_digest();

// CSV with header "dbh,height,volume"; values are interpreted in the given
// units and converted to canonical on load. LF or CRLF line endings.
Dataset load_csv(std::istream& in, const std::string& name, const SourceUnits& units);
Dataset load_csv(const std::filesystem::path& path, const SourceUnits& units);

// inverse of load_csv for the same units
void write_csv(const Dataset& ds, std::ostream& out, const SourceUnits& units);

DatasetSummary summary(const Dataset& ds);

}  // namespace mensura
