// mrpot: bound states of the Manning-Rosen potential from the command line.
//
// Exit codes: 0 success, 1 no bound state / empty result, 2 usage error,
// 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mrpot/mrpot.hpp>

namespace {

using namespace mrpot;

constexpr int exit_ok = 0;
constexpr int exit_empty = 1;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

struct usage_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct potential_flags
{
    double alpha = 0.75;
    double inv_b = 0.025;
    std::string A = "2b";
    std::string scheme = "case1";
    int l_max = 4;
    std::string units = "au";
    std::string molecule;
    std::string constants_file;
    std::string molecules_file;
    std::string format = "csv";
};

void add_potential_flags(CLI::App& cmd, potential_flags& f)
{
    cmd.add_option("--alpha", f.alpha, "Manning-Rosen alpha")->capture_default_str();
    cmd.add_option("--inv-b", f.inv_b, "Inverse screening length 1/b (1/bohr for au, 1/pm for ev)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--A", f.A, "Coupling A, a number or the literal '2b'")->capture_default_str();
    cmd.add_option("--scheme", f.scheme, "Centrifugal approximation")
        ->capture_default_str()
        ->check(CLI::IsMember({"case1", "case2", "case3", "legacy"}));
    cmd.add_option("--l-max", f.l_max, "Largest orbital quantum number")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd.add_option("--units", f.units, "Energy units")->capture_default_str()->check(CLI::IsMember({"au", "ev"}));
    cmd.add_option("--molecule", f.molecule, "Molecule for eV output (HCl, CH, LiH, CO, ...)");
    cmd.add_option("--constants-file", f.constants_file, "key = value file overriding hbar_c_eV_A, amu_eV, length_unit");
    cmd.add_option("--molecules-file", f.molecules_file, "Additional molecule registry file");
}

void add_format_flag(CLI::App& cmd, std::string& format)
{
    cmd.add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
}

/// Everything needed to turn dimensionless levels into output energies.
struct context
{
    potential_params params;
    approx_scheme scheme;
    std::string scheme_name;
    std::string units; // "au" or "eV"
    double eV_per_unit = 0.0; // eV per hbar^2/(2 mu b^2), eV mode only

    double convert(double energy) const
    {
        if (units == "au") return energy;
        return energy / params.energy_unit() * eV_per_unit;
    }
};

std::ifstream open_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open '" + path + "'");
    return in;
}

context make_context(potential_flags const& f)
{
    context ctx;
    ctx.params.alpha = f.alpha;
    ctx.params.b = 1.0 / f.inv_b;
    if (f.A == "2b") {
        ctx.params.A = 2.0 * ctx.params.b;
    }
    else {
        try {
            std::size_t used = 0;
            ctx.params.A = std::stod(f.A, &used);
            if (used != f.A.size()) throw std::invalid_argument(f.A);
        }
        catch (std::exception const&) {
            throw usage_error("--A must be a number or '2b', got '" + f.A + "'");
        }
    }
    ctx.scheme = solve_coefficients(parse_approx_case(f.scheme));
    ctx.scheme_name = f.scheme;

    if (f.units == "au") {
        ctx.units = "au";
        return ctx;
    }
    ctx.units = "eV";
    unit_system u;
    if (!f.constants_file.empty()) {
        auto in = open_file(f.constants_file);
        u = parse_constants(in, u);
    }
    molecule_registry reg;
    if (!f.molecules_file.empty()) {
        auto in = open_file(f.molecules_file);
        reg.load(in);
    }
    if (f.molecule.empty()) throw usage_error("--units ev requires --molecule");
    ctx.eV_per_unit = energy_scale_eV(reg.find(f.molecule), ctx.params.b, u);
    return ctx;
}

report::report_row analytic_row(context const& ctx, quantum_state const& st, energy_solution const& sol,
                                double inv_b)
{
    report::report_row row;
    row.state_label = spectroscopic_label(st);
    row.n = st.n;
    row.l = st.l;
    row.inv_b = inv_b;
    row.alpha = ctx.params.alpha;
    row.scheme = ctx.scheme_name;
    row.energy_analytic = ctx.convert(sol.energy);
    row.units = ctx.units;
    return row;
}

template <typename Row>
void emit(std::string const& format, std::string_view command, std::vector<std::string> const& header,
          std::vector<Row> const& rows, nlohmann::ordered_json summary = nlohmann::ordered_json::object())
{
    if (format == "json") {
        std::cout << report::document(command, rows, std::move(summary)).dump(2) << '\n';
    }
    else {
        report::write_csv(std::cout, header, rows);
    }
}

/// Evaluates f(i) for i in [0, count) concurrently; results keep index order.
template <typename F>
auto parallel_map(std::size_t count, F f)
{
    using R = decltype(f(std::size_t{}));
    std::vector<std::future<R>> futures;
    futures.reserve(count);
    for (std::size_t i = 0; i < count; ++i) futures.push_back(std::async(std::launch::async, f, i));
    std::vector<R> out;
    out.reserve(count);
    for (auto& fu : futures) out.push_back(fu.get());
    return out;
}

int cmd_table(int which, std::string const& format)
{
    std::vector<report::table_cell> cells;
    auto const case1 = solve_coefficients(approx_case::case1);
    auto const legacy = solve_coefficients(approx_case::legacy);

    if (which == 1) {
        auto const blocks = parallel_map(published::table1.size(), [&](std::size_t i) {
            auto const& row = published::table1[i];
            auto const st = parse_state_label(row.state);
            std::vector<report::table_cell> out;
            for (std::size_t k = 0; k < published::table1_alphas.size(); ++k) {
                potential_params p;
                p.b = 1.0 / row.inv_b;
                p.A = 2.0 * p.b;
                p.alpha = published::table1_alphas[k];
                report::table_cell base;
                base.table = 1;
                base.state_label = std::string(row.state);
                base.n = st.n;
                base.l = st.l;
                base.inv_b = row.inv_b;
                base.alpha = p.alpha;
                base.units = "au";

                auto const present = energy_level(p, st, case1);
                auto cell = base;
                cell.column = "present";
                cell.method = "closed-form case1";
                cell.value = -present.energy;
                cell.published = row.present[k];
                cell.provenance = "published";
                out.push_back(cell);

                cell = base;
                cell.column = "previous";
                cell.method = "closed-form legacy";
                cell.value = -energy_level(p, st, legacy).energy;
                cell.published = row.previous[k];
                cell.provenance = "published";
                out.push_back(cell);

                auto const cfg = auto_config(p, st, present.energy);
                cell = base;
                cell.column = "numerov";
                cell.method = "numerov exact centrifugal";
                cell.value = -solve_eigenvalue(p, st, cfg).energy;
                cell.published = row.reference[k];
                cell.provenance = row.reference[k] ? "published" : "repo-generated";
                out.push_back(cell);
            }
            return out;
        });
        for (auto const& b : blocks) cells.insert(cells.end(), b.begin(), b.end());
    }
    else {
        auto const& table = which == 2 ? published::table2 : published::table3;
        auto const& names = which == 2 ? published::table2_molecules : published::table3_molecules;
        molecule_registry const reg;
        for (auto const& row : table) {
            auto const st = parse_state_label(row.state);
            for (std::size_t m = 0; m < 2; ++m) {
                auto const& mol = reg.find(names[m]);
                auto const& printed = m == 0 ? row.first : row.second;
                for (std::size_t k = 0; k < published::molecule_table_alphas.size(); ++k) {
                    double const alpha = published::molecule_table_alphas[k];
                    report::table_cell cell;
                    cell.table = which;
                    cell.molecule = mol.name;
                    cell.state_label = std::string(row.state);
                    cell.n = st.n;
                    cell.l = st.l;
                    cell.inv_b = row.inv_b;
                    cell.alpha = alpha;
                    cell.column = mol.name;
                    cell.method = alpha == 0.0 ? "hulthen case1 (alpha 0 or 1)" : "closed-form case1";
                    cell.value = table_energy_eV(mol, st, alpha, row.inv_b, case1);
                    cell.units = "eV";
                    cell.published = printed[k];
                    cell.provenance = "published";
                    cells.push_back(cell);
                }
            }
        }
    }
    emit(format, "table", report::table_columns(), cells);
    return exit_ok;
}

int cmd_spectrum(potential_flags const& f)
{
    auto const ctx = make_context(f);
    auto const levels = enumerate_bound_states(ctx.params, ctx.scheme, f.l_max);
    std::vector<report::report_row> rows;
    for (auto const& [st, sol] : levels) rows.push_back(analytic_row(ctx, st, sol, f.inv_b));
    emit(f.format, "spectrum", report::report_columns(), rows);
    return rows.empty() ? exit_empty : exit_ok;
}

std::vector<quantum_state> parse_state_list(std::string const& list)
{
    std::vector<quantum_state> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_state_label(item));
    }
    return out;
}

int cmd_compare(potential_flags const& f, std::string const& numeric, std::optional<std::string> const& states)
{
    auto const ctx = make_context(f);
    std::vector<quantum_state> selection;
    if (states) {
        selection = parse_state_list(*states);
        if (selection.empty()) throw usage_error("--states selects no states");
    }
    else {
        for (auto const& [st, sol] : enumerate_bound_states(ctx.params, ctx.scheme, f.l_max)) selection.push_back(st);
        if (selection.empty()) {
            emit(f.format, "compare", report::report_columns(), std::vector<report::report_row>{});
            return exit_empty;
        }
    }

    auto const mode = numeric == "exact" ? centrifugal_mode::exact() : centrifugal_mode::approx(ctx.scheme);
    auto rows = parallel_map(selection.size(), [&](std::size_t i) {
        auto const st = selection[i];
        report::report_row row;
        row.state_label = spectroscopic_label(st);
        row.n = st.n;
        row.l = st.l;
        row.inv_b = f.inv_b;
        row.alpha = ctx.params.alpha;
        row.scheme = ctx.scheme_name;
        row.units = ctx.units;
        try {
            auto const sol = energy_level(ctx.params, st, ctx.scheme);
            row = analytic_row(ctx, st, sol, f.inv_b);
            auto const cfg = auto_config(ctx.params, st, sol.energy, mode);
            auto const res = solve_eigenvalue(ctx.params, st, cfg);
            row = report::with_numeric(row, ctx.convert(res.energy));
        }
        catch (mrpot::error const& e) {
            row.energy_analytic = std::nan("");
            row.error = e.what();
        }
        return row;
    });

    double max_delta = 0.0;
    bool failed = false;
    for (auto const& r : rows) {
        if (!r.error.empty()) failed = true;
        if (r.delta) max_delta = std::max(max_delta, std::abs(*r.delta));
    }
    nlohmann::ordered_json summary;
    summary["numeric"] = numeric;
    summary["max_abs_delta"] = max_delta;
    summary["failed_rows"] = std::count_if(rows.begin(), rows.end(), [](auto const& r) { return !r.error.empty(); });
    emit(f.format, "compare", report::report_columns(), rows, summary);
    if (f.format == "csv") std::cout << "# max |delta| = " << report::sci(max_delta) << ' ' << ctx.units << '\n';
    return failed ? exit_empty : exit_ok;
}

struct grid_spec
{
    double lo;
    double hi;
    std::size_t count;
};

grid_spec parse_grid(std::string const& s)
{
    auto const c1 = s.find(':');
    auto const c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw usage_error("--grid must be min:max:count");
    try {
        grid_spec g{std::stod(s.substr(0, c1)), std::stod(s.substr(c1 + 1, c2 - c1 - 1)), 0};
        long long const count = std::stoll(s.substr(c2 + 1));
        if (count < 1) throw usage_error("--grid count must be positive");
        g.count = static_cast<std::size_t>(count);
        if (!(g.lo > 0.0) || !std::isfinite(g.hi)) throw usage_error("--grid needs 0 < min");
        if (g.count > 1 && !(g.hi > g.lo)) throw usage_error("--grid needs min < max");
        return g;
    }
    catch (usage_error const&) {
        throw;
    }
    catch (std::exception const&) {
        throw usage_error("--grid must be min:max:count, got '" + s + "'");
    }
}

std::vector<double> linear_grid(grid_spec const& g)
{
    std::vector<double> r(g.count);
    for (std::size_t i = 0; i < g.count; ++i) {
        r[i] = g.count == 1 ? g.lo : g.lo + (g.hi - g.lo) * static_cast<double>(i) / static_cast<double>(g.count - 1);
    }
    return r;
}

int cmd_wavefunction(potential_flags const& f, std::string const& state, std::optional<std::string> const& grid_arg)
{
    auto const ctx = make_context(f);
    quantum_state st;
    try {
        st = parse_state_label(state);
    }
    catch (parse_error const& e) {
        throw usage_error(e.what());
    }
    auto const sol = energy_level(ctx.params, st, ctx.scheme); // throws when unbound

    std::vector<double> grid = grid_arg ? linear_grid(parse_grid(*grid_arg))
                                        : default_grid(ctx.params.b, sol.epsilon_prime);
    bool const hulthen = ctx.params.alpha == 0.0 || ctx.params.alpha == 1.0;
    double const delta = 1.0 / ctx.params.b;
    auto build = [&](std::span<double const> g) {
        return hulthen ? hulthen_wavefunction(ctx.params.A * delta / 2.0, delta, st, g)
                       : radial_wavefunction(ctx.params, st, ctx.scheme, g);
    };
    auto const wf = build(grid);
    auto const dense = default_grid(ctx.params.b, sol.epsilon_prime, 4000);
    int const nodes = count_nodes(build(dense).samples);

    std::cout << "# state=" << spectroscopic_label(st) << " n=" << st.n << " l=" << st.l << '\n';
    std::cout << "# N=" << report::sci(wf.norm_constant) << " epsilon_prime=" << report::fixed(wf.epsilon_prime, 10)
              << " Lambda=" << report::fixed(wf.Lambda, 10) << " nodes=" << nodes << '\n';
    std::cout << "r,R\n";
    for (auto const& s : wf.samples) std::cout << report::sci(s.r) << ',' << report::sci(s.R) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bound states of the Manning-Rosen potential"};
    app.require_subcommand(1);

    int which = 1;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "Reproduce a published energy table");
    table->add_option("--which", which, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));
    add_format_flag(*table, table_format);

    potential_flags spec_flags;
    auto* spectrum = app.add_subcommand("spectrum", "List all bound states");
    add_potential_flags(*spectrum, spec_flags);
    add_format_flag(*spectrum, spec_flags.format);

    potential_flags cmp_flags;
    std::string numeric = "exact";
    std::optional<std::string> states;
    auto* compare = app.add_subcommand("compare", "Compare closed-form and Numerov energies");
    add_potential_flags(*compare, cmp_flags);
    add_format_flag(*compare, cmp_flags.format);
    compare->add_option("--numeric", numeric, "Centrifugal term used by the Numerov solver")
        ->capture_default_str()
        ->check(CLI::IsMember({"exact", "approximated"}));
    compare->add_option("--states", states, "Comma-separated labels such as 2p,3d (default: all bound states)");

    potential_flags wf_flags;
    std::string state;
    std::optional<std::string> grid;
    auto* wavefunction = app.add_subcommand("wavefunction", "Sample a normalized radial wavefunction");
    add_potential_flags(*wavefunction, wf_flags);
    wavefunction->add_option("--state", state, "Spectroscopic label, e.g. 2p")->required();
    wavefunction->add_option("--grid", grid, "min:max:count, linear in r");
    wavefunction->add_option("--format", wf_flags.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (table->parsed()) return cmd_table(which, table_format);
        if (spectrum->parsed()) return cmd_spectrum(spec_flags);
        if (compare->parsed()) return cmd_compare(cmp_flags, numeric, states);
        if (wavefunction->parsed()) return cmd_wavefunction(wf_flags, state, grid);
    }
    catch (usage_error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (unbound_state_error const& e) {
        std::cerr << "error: " << e.what() << " (critical A = " << e.critical_A() << ")\n";
        return exit_empty;
    }
    catch (numeric_error const& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    }
    catch (bracket_error const& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    }
    catch (mrpot::error const& e) {
        // parse, lookup and domain errors all stem from user input here
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
