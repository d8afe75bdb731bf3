#ifndef ARD_REPORT_IO_HPP
#define ARD_REPORT_IO_HPP

#include <string>

#include "ard/solver.hpp"

namespace ard {

// CSV and text emitters. All numeric cells use %.10g so identical runs
// produce byte-identical files.
std::string snapshot_csv(const FieldState& state);
std::string snapshot_filename(double t);  // snap_t<t>.csv, t to 6 significant digits
std::string diagnostics_csv(const Diagnostics& d);
std::string series_csv(const FrontSeries& s);
std::string fit_summary(const FitResult& fit);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

FrontSeries series_from_csv(const std::string& text);

}  // namespace ard

#endif
