#include "dmdt/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "dmdt/baseline_wt.hpp"
#include "dmdt/error.hpp"
#include "dmdt/metrics.hpp"

namespace dmdt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

} // namespace

std::optional<CodecKind> parse_codec(std::string_view name) {
    if (name == "dmdt")
        return CodecKind::dmdt;
    if (name == "wt")
        return CodecKind::wt;
    return std::nullopt;
}

std::string_view codec_name(CodecKind c) { return c == CodecKind::dmdt ? "dmdt" : "wt"; }

Dataset load_dataset(const std::filesystem::path& path, const DatasetOptions& opts) {
    namespace fs = std::filesystem;
    Dataset ds;
    ds.name = path.filename().empty() ? path.parent_path().filename().string() : path.filename().string();

    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && entry.path().filename().string().front() != '.')
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(path)) {
        files.push_back(path);
        ds.name = path.stem().string();
    } else {
        throw IngestError("no records: " + path.string() + " does not exist");
    }
    if (files.empty())
        throw IngestError("no records in " + path.string());

    for (const auto& f : files) {
        IngestSpec spec;
        spec.path = f;
        spec.format = opts.format ? *opts.format : guess_format(f);
        spec.channel = opts.channel;
        spec.bit_depth = opts.bit_depth;
        Record rec{f.stem().string(), ingest(spec)};
        if (rec.signal.samples.empty())
            throw IngestError("record " + f.string() + " has no samples");
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

ReportRow evaluate_record(const Record& record, const SweepConfig& cfg, double theta,
                          const std::string& dataset) {
    const auto& x = record.signal.samples;
    ReportRow row;
    row.dataset = dataset;
    row.record = record.name;
    row.n = x.size();
    row.theta = theta;

    std::vector<double> y;
    std::uint64_t bits = 0;
    if (cfg.codec == CodecKind::dmdt) {
        const CodecConfig cc{cfg.d1, cfg.d2, theta, cfg.block_len, cfg.subtract_mean};
        const auto t0 = Clock::now();
        const auto blocks = compress_stream(x, cc);
        row.enc_time_ms = elapsed_ms(t0);
        const auto t1 = Clock::now();
        y = decompress_stream(blocks);
        row.dec_time_ms = elapsed_ms(t1);
        bits = stream_bits(blocks);
        row.d1 = cfg.d1;
        row.d2 = cfg.d2;
    } else {
        const wt::WtConfig wc{cfg.levels, theta, cfg.block_len};
        const auto t0 = Clock::now();
        const auto blocks = wt::wt_compress_stream(x, wc);
        row.enc_time_ms = elapsed_ms(t0);
        const auto t1 = Clock::now();
        y = wt::wt_decompress_stream(blocks);
        row.dec_time_ms = elapsed_ms(t1);
        bits = wt::wt_stream_bits(blocks);
        row.d1 = 2;
        row.d2 = 2;
    }

    const auto original_bits = static_cast<std::uint64_t>(x.size()) *
                               static_cast<std::uint64_t>(record.signal.bit_depth);
    const auto m = metrics::evaluate(x, y, original_bits, bits, theta);
    row.cr = m.cr;
    row.prd = m.prd;
    row.qs = m.qs;
    row.snr_db = m.snr_db;
    row.max_dev = m.max_dev;
    return row;
}

std::vector<ReportRow> run_sweep(const Dataset& dataset, const SweepConfig& cfg) {
    if (cfg.thetas.empty())
        throw std::invalid_argument("sweep: empty theta grid");
    const std::size_t nt = cfg.thetas.size();
    const std::size_t total = dataset.records.size() * nt;
    std::vector<ReportRow> rows(total);
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(total); ++k) {
        try {
            const auto& rec = dataset.records[static_cast<std::size_t>(k) / nt];
            rows[k] = evaluate_record(rec, cfg, cfg.thetas[static_cast<std::size_t>(k) % nt], dataset.name);
        } catch (...) {
#pragma omp critical(dmdt_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::vector<double> parse_theta_grid(std::string_view text) {
    auto number = [&](std::string_view s) {
        try {
            std::size_t used = 0;
            const std::string str(s);
            const double v = std::stod(str, &used);
            if (used != str.size())
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad theta value '" + std::string(s) + "'");
        }
    };

    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto p1 = text.find(':');
        const auto p2 = text.find(':', p1 + 1);
        if (p2 == std::string_view::npos)
            throw std::invalid_argument("sweep range must be a:b:step");
        const double a = number(text.substr(0, p1));
        const double b = number(text.substr(p1 + 1, p2 - p1 - 1));
        const double step = number(text.substr(p2 + 1));
        if (!(step > 0.0) || b < a)
            throw std::invalid_argument("sweep range needs a <= b and step > 0");
        const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(a + static_cast<double>(i) * step);
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto pos = text.find(',', start);
            out.push_back(number(text.substr(start, pos - start)));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
    }
    for (double t : out)
        if (!(t > 0.0))
            throw std::invalid_argument("theta values must be positive");
    return out;
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "dataset,record,n,d1,d2,theta,cr,prd,qs,snr_db,max_dev,enc_time_ms,dec_time_ms\n";
    const auto flags = out.flags();
    const auto prec = out.precision();
    out << std::setprecision(10);
    for (const auto& r : rows) {
        out << r.dataset << ',' << r.record << ',' << r.n << ',' << r.d1 << ',' << r.d2 << ','
            << r.theta << ',' << r.cr << ',' << r.prd << ',';
        if (r.qs)
            out << *r.qs;
        out << ',' << r.snr_db << ',' << r.max_dev << ',' << r.enc_time_ms << ',' << r.dec_time_ms
            << '\n';
    }
    out.flags(flags);
    out.precision(prec);
}

void write_report_json(std::ostream& out, const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["dataset"] = r.dataset;
        j["record"] = r.record;
        j["n"] = r.n;
        j["d1"] = r.d1;
        j["d2"] = r.d2;
        j["theta"] = r.theta;
        j["cr"] = r.cr;
        j["prd"] = r.prd;
        j["qs"] = r.qs ? nlohmann::json(*r.qs) : nlohmann::json(nullptr);
        j["snr_db"] = std::isfinite(r.snr_db) ? nlohmann::json(r.snr_db) : nlohmann::json(nullptr);
        j["max_dev"] = r.max_dev;
        j["enc_time_ms"] = r.enc_time_ms;
        j["dec_time_ms"] = r.dec_time_ms;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void write_plot_data(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "record,theta,cr,snr_db\n" << std::setprecision(10);
    for (const auto& r : rows)
        out << r.record << ',' << r.theta << ',' << r.cr << ',' << r.snr_db << '\n';
}

std::vector<ThetaSummary> summarize(const std::vector<ReportRow>& rows) {
    std::map<double, std::vector<const ReportRow*>> by_theta;
    for (const auto& r : rows)
        by_theta[r.theta].push_back(&r);
    std::vector<ThetaSummary> out;
    for (const auto& [theta, group] : by_theta) {
        ThetaSummary s;
        s.theta = theta;
        s.records = group.size();
        std::size_t with_qs = 0;
        for (const ReportRow* r : group) {
            s.mean_cr += r->cr;
            s.mean_prd += r->prd;
            s.mean_snr_db += r->snr_db;
            if (r->qs) {
                s.mean_qs += *r->qs;
                ++with_qs;
            }
        }
        const auto n = static_cast<double>(group.size());
        s.mean_cr /= n;
        s.mean_prd /= n;
        s.mean_snr_db /= n;
        s.mean_qs = with_qs ? s.mean_qs / static_cast<double>(with_qs) : 0.0;
        s.aggregate_qs = s.mean_prd > 0.0 ? s.mean_cr / s.mean_prd : 0.0;
        out.push_back(s);
    }
    return out;
}

std::vector<MatchedPair> match_by_snr(const std::vector<ReportRow>& dmdt_rows,
                                      const std::vector<ReportRow>& wt_rows, double tolerance_db,
                                      std::size_t* unmatched) {
    std::vector<MatchedPair> out;
    std::size_t missing = 0;
    for (const auto& d : dmdt_rows) {
        const ReportRow* best = nullptr;
        for (const auto& w : wt_rows) {
            if (w.record != d.record || std::abs(w.snr_db - d.snr_db) > tolerance_db)
                continue;
            if (!best || w.cr > best->cr)
                best = &w;
        }
        if (!best) {
            ++missing;
            continue;
        }
        out.push_back({d.record, d.theta, d.cr, d.snr_db, best->theta, best->cr, best->snr_db});
    }
    if (unmatched)
        *unmatched = missing;
    return out;
}

} // namespace dmdt
