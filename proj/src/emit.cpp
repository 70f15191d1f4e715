#include "qsearch/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qsearch {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    if (s == "svg") return OutputFormat::Svg;
    throw std::invalid_argument("unknown output format: " + s);
}

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
    return std::string(buf, ptr);
}

namespace {

std::string metadata_comment(const EmitMetadata& meta, const char* prefix) {
    std::ostringstream os;
    os << prefix << " algorithm=" << meta.algorithm << " n=" << meta.n << " M=" << meta.M
       << " theta=" << format_double(meta.theta)
       << " theta_approx=" << format_double(meta.theta_approx) << " k_opt=" << meta.k_opt
       << " version=" << kArtifactVersion << "\n";
    return os.str();
}

}  // namespace

std::string render_csv(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta) {
    if (rows.empty()) throw std::invalid_argument("no rows to emit");
    std::ostringstream os;
    os << metadata_comment(meta, "#");
    os << "step,relative_step,success,E_n,E_2,E_n_asym,E_2_asym\n";
    for (const auto& r : rows) {
        os << r.step << ',' << format_double(r.relative_step) << ',' << format_double(r.success)
           << ',' << format_double(r.E_n) << ',' << format_double(r.E_2) << ','
           << format_double(r.E_n_asym) << ',' << format_double(r.E_2_asym) << '\n';
    }
    return os.str();
}

std::string render_json(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta) {
    if (rows.empty()) throw std::invalid_argument("no rows to emit");
    nlohmann::ordered_json doc;
    doc["metadata"] = {{"algorithm", meta.algorithm},
                       {"n", meta.n},
                       {"M", meta.M},
                       {"theta", meta.theta},
                       {"theta_approx", meta.theta_approx},
                       {"k_opt", meta.k_opt},
                       {"version", kArtifactVersion}};
    auto& arr = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({{"step", r.step},
                       {"relative_step", r.relative_step},
                       {"success", r.success},
                       {"E_n", r.E_n},
                       {"E_2", r.E_2},
                       {"E_n_asym", r.E_n_asym},
                       {"E_2_asym", r.E_2_asym}});
    }
    return doc.dump(2) + "\n";
}

namespace {

constexpr double kSvgW = 800.0, kSvgH = 500.0;
constexpr double kMargin = 60.0;

std::string polyline(const std::vector<EntanglementPoint>& rows, double max_step,
                     double (*pick)(const EntanglementPoint&), const char* color) {
    std::ostringstream os;
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double x = kMargin + (kSvgW - 2 * kMargin) * rows[i].step / std::max(max_step, 1.0);
        const double y = kSvgH - kMargin - (kSvgH - 2 * kMargin) * pick(rows[i]);
        if (i) os << ' ';
        os << format_double(x) << ',' << format_double(y);
    }
    os << "\"/>\n";
    return os.str();
}

}  // namespace

std::string render_svg(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta) {
    if (rows.empty()) throw std::invalid_argument("no rows to emit");
    const double max_step = static_cast<double>(rows.back().step);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgW << "\" height=\""
       << kSvgH << "\">\n";
    os << "  <!--" << metadata_comment(meta, "") << "  -->\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <line x1=\"" << kMargin << "\" y1=\"" << kSvgH - kMargin << "\" x2=\""
       << kSvgW - kMargin << "\" y2=\"" << kSvgH - kMargin << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
       << "\" y2=\"" << kSvgH - kMargin << "\" stroke=\"black\"/>\n";
    os << polyline(rows, max_step, [](const EntanglementPoint& r) { return r.success; },
                   "#e6b800");
    os << polyline(rows, max_step, [](const EntanglementPoint& r) { return r.E_n; }, "#1f77b4");
    os << polyline(rows, max_step, [](const EntanglementPoint& r) { return r.E_2; }, "#9467bd");
    os << "  <text x=\"" << kSvgW / 2 << "\" y=\"" << kSvgH - kMargin / 3
       << "\" text-anchor=\"middle\">step</text>\n";
    os << "  <text x=\"" << kMargin / 3 << "\" y=\"" << kSvgH / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << kMargin / 3 << ' ' << kSvgH / 2
       << ")\">value</text>\n";
    os << "  <text x=\"" << kSvgW - kMargin << "\" y=\"" << kMargin / 2
       << "\" text-anchor=\"end\">E_n (blue), E_2 (purple), success (yellow)</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_table(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta,
                         OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return render_csv(rows, meta);
        case OutputFormat::Json: return render_json(rows, meta);
        case OutputFormat::Svg: return render_svg(rows, meta);
    }
    throw std::logic_error("unreachable");
}

void emit_table(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta,
                OutputFormat format, const std::string& path) {
    const std::string text = render_table(rows, meta, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<EntanglementPoint> parse_csv(const std::string& text) {
    std::vector<EntanglementPoint> rows;
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    auto parse_double = [](const std::string& tok) {
        double v{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::runtime_error("bad float field: " + tok);
        return v;
    };
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "step,relative_step,success,E_n,E_2,E_n_asym,E_2_asym")
                throw std::runtime_error("unexpected CSV header");
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (std::getline(ls, tok, ',')) toks.push_back(tok);
        if (toks.size() != 7) throw std::runtime_error("bad CSV row: " + line);
        rows.push_back(EntanglementPoint{std::stoi(toks[0]), parse_double(toks[1]),
                                         parse_double(toks[2]), parse_double(toks[3]),
                                         parse_double(toks[4]), parse_double(toks[5]),
                                         parse_double(toks[6])});
    }
    return rows;
}

}  // namespace qsearch
