#include "divknot/cli.hpp"

#include "divknot/report.hpp"

#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <vector>

namespace divknot::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return buf.str();
}

Divide load_divide(const RunManifest& m) {
    const int sources = int(m.gauss.has_value()) + int(m.file.has_value()) + int(m.snail.has_value());
    if (sources != 1) throw UsageError("exactly one of --gauss, --file, --snail is required");
    Divide d;
    if (m.gauss)
        d = parse_divide(*m.gauss);
    else if (m.file)
        d = parse_divide_file(read_file(*m.file));
    else
        d = snail(*m.snail);
    if (m.black) d.black_hint = m.black;
    return d;
}

/// Runs f, translating the error taxonomy into exit codes.
template <typename F>
CommandResult guarded(F&& f) {
    CommandResult result;
    try {
        result = f();
    } catch (const UsageError& e) {
        result = {kUsage, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const ValidationError& e) {
        result = {kValidation, "", std::string("invalid divide: ") + e.what() + "\n"};
    } catch (const IoError& e) {
        result = {kIo, "", std::string("I/O error: ") + e.what() + "\n"};
    } catch (const InvariantViolation& e) {
        result = {kInternal, "", std::string("internal invariant violated: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        result = {kUsage, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        result = {kInternal, "", std::string("internal error: ") + e.what() + "\n"};
    }
    return result;
}

struct Analysis {
    DivideDiagram diagram;
    SeifertData data;
    BoundsReport bounds;
};

Analysis analyse_divide(const Divide& divide, const RunManifest& m, std::optional<int> snail_n) {
    Analysis a{analyse(divide, m.swap_colours), {}, {}};
    a.data = seifert_matrix(a.diagram);
    validate_seifert(a.data);
    std::optional<SubgroupBasis> known;
    if (snail_n) known = snail_subgroup_in_basis(a.diagram, a.data, *snail_n);
    a.bounds = g4_bounds(a.data, m.search, known);
    for (const auto& c : a.bounds.certificates)
        if (!revalidate(a.data.matrix, a.bounds.invariants.genus, c))
            throw InvariantViolation("certificate from " + c.source + " failed re-validation");
    return a;
}

struct FamilyRow {
    int n = 0;
    long genus = 0;
    int signature = 0;
    long lower = 0;
    long upper = 0;
    long smooth_g4 = 0;
    Rational ratio;
};

FamilyRow family_row(int n, const RunManifest& m) {
    try {
        const Analysis a = analyse_divide(snail(n), m, n);
        FamilyRow row{n, a.bounds.invariants.genus, a.bounds.invariants.signature, a.bounds.g4top_lower,
                      a.bounds.g4top_upper, a.bounds.invariants.smooth_g4, Rational(0)};
        row.ratio = Rational(row.upper, row.smooth_g4);
        row.ratio.canonicalize();
        return row;
    } catch (const InvariantViolation& e) {
        throw InvariantViolation("n = " + std::to_string(n) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(e.kind(), "n = " + std::to_string(n) + ": " + e.what());
    }
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("range '" + text + "' is not of the form a..b");
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    int a = 0;
    int b = 0;
    try {
        a = std::stoi(text.substr(0, dots), &used_a);
        b = std::stoi(text.substr(dots + 2), &used_b);
    } catch (const std::exception&) {
        throw std::invalid_argument("range '" + text + "' is not of the form a..b");
    }
    if (used_a != dots || used_b != text.size() - dots - 2)
        throw std::invalid_argument("range '" + text + "' is not of the form a..b");
    if (a < 1 || b < a) throw std::invalid_argument("range '" + text + "' must satisfy 1 <= a <= b");
    return {a, b};
}

CommandResult cmd_validate(const RunManifest& m) {
    return guarded([&] {
        const Divide d = load_divide(m);
        const DivideDiagram diagram = analyse(d, m.swap_colours);
        std::size_t inner = 0;
        for (const auto& r : diagram.regions) inner += r.is_inner ? 1 : 0;
        std::ostringstream os;
        if (m.format == OutputFormat::Json) {
            os << dump(Json{{"valid", true},
                            {"double_points", diagram.map.double_points},
                            {"regions", diagram.regions.size()},
                            {"inner_regions", inner}});
        } else {
            os << "valid: " << diagram.map.double_points << " double points, " << diagram.regions.size()
               << " regions (" << inner << " inner)\n";
        }
        return CommandResult{kSuccess, os.str(), ""};
    });
}

CommandResult cmd_report(const RunManifest& m) {
    return guarded([&] {
        const Divide d = load_divide(m);
        const Analysis a = analyse_divide(d, m, m.snail);
        const std::string out = m.format == OutputFormat::Json ? dump(report_json(a.diagram, a.data, a.bounds))
                                                               : report_text(a.diagram, a.data, a.bounds);
        return CommandResult{kSuccess, out, ""};
    });
}

CommandResult cmd_family(const RunManifest& m) {
    return guarded([&] {
        if (!m.range) throw UsageError("family requires --range a..b");
        const auto [lo, hi] = *m.range;
        std::vector<std::future<FamilyRow>> pending;
        for (int n = lo; n <= hi; ++n) pending.push_back(std::async(std::launch::async, family_row, n, std::cref(m)));
        std::vector<FamilyRow> rows;
        for (auto& f : pending) rows.push_back(f.get());

        std::ostringstream os;
        if (m.format == OutputFormat::Json) {
            Json doc = Json::array();
            for (const auto& r : rows)
                doc.push_back(Json{{"n", r.n},
                                   {"genus", r.genus},
                                   {"smooth_g4", r.smooth_g4},
                                   {"signature", r.signature},
                                   {"g4top", {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.lower == r.upper}}},
                                   {"ratio", r.ratio.get_str()},
                                   {"ratio_value", r.ratio.get_num().get_d() / r.ratio.get_den().get_d()}});
            os << dump(doc);
        } else {
            os << std::left << std::setw(5) << "n" << std::setw(7) << "genus" << std::setw(11) << "smooth_g4"
               << std::setw(11) << "signature" << std::setw(10) << "g4top" << "ratio\n";
            for (const auto& r : rows) {
                const std::string interval = "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
                os << std::setw(5) << r.n << std::setw(7) << r.genus << std::setw(11) << r.smooth_g4 << std::setw(11)
                   << r.signature << std::setw(10) << interval << r.ratio.get_str() << "\n";
            }
        }
        return CommandResult{kSuccess, os.str(), ""};
    });
}

CommandResult run(const RunManifest& m) {
    CommandResult result;
    if (m.command == "validate")
        result = cmd_validate(m);
    else if (m.command == "report")
        result = cmd_report(m);
    else if (m.command == "family")
        result = cmd_family(m);
    else
        return {kUsage, "", "unknown command '" + m.command + "'\n"};

    if (result.exit_code == kSuccess && m.out_path) {
        std::ofstream out(*m.out_path, std::ios::binary);
        if (!out || !(out << result.output)) return {kIo, "", "I/O error: cannot write '" + *m.out_path + "'\n"};
        result.output.clear();
    }
    return result;
}

}  // namespace divknot::cli
