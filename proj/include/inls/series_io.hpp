// Persistence: the observable CSV and the flat binary field format.
//
// CSV columns: t, mass, kinetic, G, energy, variance, weighted_norm_sq,
// pc_quantity, then one lq_<q> column per configured q.  Floats are written
// with 17 significant digits so a rerun of the same config is byte-identical.
//
// Field files: little-endian header (u64 d, u64 n, f64 L) followed by
// re/im f64 pairs in row-major order.
#pragma once

#include <filesystem>
#include <string>

#include "inls/observables.hpp"

namespace inls {

void write_series_csv(const std::filesystem::path& path, const TimeSeries& s);

// Reads a CSV produced by write_series_csv; params and initial_weighted are
// not stored in the CSV and must be supplied by the caller (the run
// manifest carries them).  Throws SchemaError on malformed input.
TimeSeries read_series_csv(const std::filesystem::path& path, const ProblemParams& params);

void write_field(const std::filesystem::path& path, const ComplexField& f);
ComplexField read_field(const std::filesystem::path& path);

}  // namespace inls
