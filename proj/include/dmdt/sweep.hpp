#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dmdt/codec.hpp"
#include "dmdt/ingest.hpp"

namespace dmdt {

enum class CodecKind { dmdt, wt };

std::optional<CodecKind> parse_codec(std::string_view name);
std::string_view codec_name(CodecKind c);

struct Record {
    std::string name;
    Signal signal;
};

struct Dataset {
    std::string name;
    std::vector<Record> records;
};

struct DatasetOptions {
    /// Empty: guess per file from its extension.
    std::optional<SampleFormat> format;
    std::size_t channel = 0;
    std::optional<int> bit_depth;
};

/// A directory yields one record per regular file, sorted by name; a file
/// yields a single record. Throws IngestError("no records ...") when empty.
Dataset load_dataset(const std::filesystem::path& path, const DatasetOptions& opts = {});

struct SweepConfig {
    CodecKind codec = CodecKind::dmdt;
    std::size_t d1 = 32;
    std::size_t d2 = 16;
    std::size_t block_len = 512;
    std::size_t levels = 4;
    MeanMode subtract_mean = MeanMode::automatic;
    std::vector<double> thetas;
};

/// One (record, theta) evaluation over the whole record.
struct ReportRow {
    std::string dataset;
    std::string record;
    std::size_t n = 0;
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    double theta = 0.0;
    double cr = 0.0;
    double prd = 0.0;
    std::optional<double> qs;
    double snr_db = 0.0;
    double max_dev = 0.0;
    double enc_time_ms = 0.0;
    double dec_time_ms = 0.0;
};

/// Compresses and decompresses one record at one theta. CR uses
/// n * bit_depth input bits over the total container bits. WT rows report
/// d1 = d2 = 2.
ReportRow evaluate_record(const Record& record, const SweepConfig& cfg, double theta,
                          const std::string& dataset = {});

/// Rows for every (record, theta), ordered by record then theta. Records are
/// evaluated concurrently.
std::vector<ReportRow> run_sweep(const Dataset& dataset, const SweepConfig& cfg);

/// "a:b:step" (inclusive, tolerant to rounding) or a comma list "5,10,15".
std::vector<double> parse_theta_grid(std::string_view text);

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_report_json(std::ostream& out, const std::vector<ReportRow>& rows);
/// "theta,cr,snr_db" triples per row, for CR/SNR curves.
void write_plot_data(std::ostream& out, const std::vector<ReportRow>& rows);

/// Corpus-level figures per theta.
struct ThetaSummary {
    double theta = 0.0;
    std::size_t records = 0;
    double mean_cr = 0.0;
    double mean_prd = 0.0;
    double mean_snr_db = 0.0;
    /// Average of per-record QS values.
    double mean_qs = 0.0;
    /// mean_cr / mean_prd.
    double aggregate_qs = 0.0;
};

std::vector<ThetaSummary> summarize(const std::vector<ReportRow>& rows);

/// A DMDT row paired with the best WT row of the same record whose SNR lies
/// within `tolerance_db`.
struct MatchedPair {
    std::string record;
    double dmdt_theta = 0.0;
    double dmdt_cr = 0.0;
    double dmdt_snr_db = 0.0;
    double wt_theta = 0.0;
    double wt_cr = 0.0;
    double wt_snr_db = 0.0;

    double cr_gain() const { return dmdt_cr / wt_cr - 1.0; }
};

/// For every DMDT row, the WT row of the same record with the highest CR
/// among those with |SNR difference| <= tolerance_db. DMDT rows without a
/// match are left out; `unmatched` receives their count.
std::vector<MatchedPair> match_by_snr(const std::vector<ReportRow>& dmdt_rows,
                                      const std::vector<ReportRow>& wt_rows, double tolerance_db,
                                      std::size_t* unmatched = nullptr);

} // namespace dmdt
