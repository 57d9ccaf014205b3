#pragma once

#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "centrifugal.hpp"
#include "errors.hpp"
#include "potential.hpp"
#include "quantum_state.hpp"
#include "spectrum.hpp"

namespace mrpot {

/// Named unknown entity (molecule, unit, key).
class lookup_error : public error
{
public:
    using error::error;
};

struct molecule
{
    std::string name;
    double reduced_mass_amu;
};

enum class length_unit
{
    angstrom,
    picometer,
    bohr,
};

inline double to_angstrom(length_unit u) noexcept
{
    switch (u) {
        case length_unit::angstrom: return 1.0;
        case length_unit::picometer: return 0.01;
        case length_unit::bohr: return 0.529177210903;
    }
    return 1.0;
}

inline length_unit parse_length_unit(std::string_view s)
{
    if (s == "angstrom") return length_unit::angstrom;
    if (s == "picometer" || s == "pm") return length_unit::picometer;
    if (s == "bohr") return length_unit::bohr;
    throw lookup_error("unknown length unit '" + std::string(s) + "'");
}

inline std::string_view to_string(length_unit u)
{
    switch (u) {
        case length_unit::angstrom: return "angstrom";
        case length_unit::picometer: return "picometer";
        case length_unit::bohr: return "bohr";
    }
    return "?";
}

/// Constants for the eV conversion. amu_eV is the rest energy of one atomic mass unit.
struct unit_system
{
    double hbar_c_eV_A = 1973.29;
    double amu_eV = 9.31494e8;
    length_unit length = length_unit::picometer;
};

/// Reads "key = value" lines; '#' starts a comment. Keys: hbar_c_eV_A, amu_eV, length_unit.
inline unit_system parse_constants(std::istream& in, unit_system base = {})
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto const hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto const eq = line.find('=');
        auto trim = [](std::string s) {
            auto const first = s.find_first_not_of(" \t\r");
            if (first == std::string::npos) return std::string{};
            auto const last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw parse_error("constants line " + std::to_string(lineno) + ": expected key = value");
        std::string const key = trim(line.substr(0, eq));
        std::string const value = trim(line.substr(eq + 1));
        if (key == "length_unit") {
            base.length = parse_length_unit(value);
            continue;
        }
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        }
        catch (std::exception const&) {
            throw parse_error("constants line " + std::to_string(lineno) + ": bad number '" + value + "'");
        }
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw parse_error("constants line " + std::to_string(lineno) + ": value must be positive");
        }
        if (key == "hbar_c_eV_A") base.hbar_c_eV_A = v;
        else if (key == "amu_eV") base.amu_eV = v;
        else throw lookup_error("constants line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return base;
}

/// Diatomic species by name. Ships with HCl, CH, LiH and CO.
class molecule_registry
{
public:
    static constexpr int format_version = 1;

    molecule_registry()
    {
        add({"HCl", 0.9801045});
        add({"CH", 0.929931});
        add({"LiH", 0.8801221});
        add({"CO", 6.8606719});
    }

    void add(molecule m)
    {
        if (m.name.empty()) throw domain_error("molecule name must not be empty");
        if (!(m.reduced_mass_amu > 0.0) || !std::isfinite(m.reduced_mass_amu)) {
            throw domain_error("molecule " + m.name + ": reduced mass must be positive");
        }
        entries_[m.name] = std::move(m);
    }

    molecule const& find(std::string_view name) const
    {
        auto const it = entries_.find(std::string(name));
        if (it == entries_.end()) throw lookup_error("unknown molecule '" + std::string(name) + "'");
        return it->second;
    }

    std::vector<molecule> all() const
    {
        std::vector<molecule> out;
        for (auto const& [_, m] : entries_) out.push_back(m);
        return out;
    }

    /// Merges a registry file:
    ///
    ///     # comments
    ///     mrpot-molecules 1
    ///     HCl 0.9801045
    ///
    /// The header line is mandatory; entries override built-ins of the same name.
    void load(std::istream& in)
    {
        std::string line;
        int lineno = 0;
        bool header = false;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto const hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            std::string first;
            if (!(ss >> first)) continue;
            if (!header) {
                int version = 0;
                if (first != "mrpot-molecules" || !(ss >> version)) {
                    throw parse_error("molecule file: missing 'mrpot-molecules <version>' header");
                }
                if (version != format_version) {
                    throw parse_error("molecule file: unsupported version " + std::to_string(version));
                }
                header = true;
                continue;
            }
            double mass = 0.0;
            std::string extra;
            if (!(ss >> mass) || (ss >> extra)) {
                throw parse_error("molecule file line " + std::to_string(lineno) + ": expected '<name> <mass_amu>'");
            }
            add({first, mass});
        }
        if (!header) throw parse_error("molecule file: empty or missing header");
    }

    void save(std::ostream& out) const
    {
        out << "mrpot-molecules " << format_version << '\n';
        out.precision(10);
        for (auto const& [name, m] : entries_) out << name << ' ' << m.reduced_mass_amu << '\n';
    }

private:
    std::map<std::string, molecule> entries_;
};

/// hbar^2 / (2 mu b^2) in eV for screening length b given in u.length units.
inline double energy_scale_eV(molecule const& mol, double b, unit_system const& u = {})
{
    if (!(b > 0.0) || !std::isfinite(b)) throw domain_error("energy_scale_eV: b must be positive");
    double const b_A = b * to_angstrom(u.length);
    double const mu_c2 = mol.reduced_mass_amu * u.amu_eV;
    return u.hbar_c_eV_A * u.hbar_c_eV_A / (2.0 * mu_c2 * b_A * b_A);
}

/// Binding energy -E in eV under the A = 2b convention, with b = 1 / inv_b in
/// u.length units. alpha = 0 or 1 goes through the Hulthen formula.
inline double table_energy_eV(molecule const& mol, quantum_state const& st, double alpha, double inv_b,
                              approx_scheme const& scheme, unit_system const& u = {})
{
    if (!(inv_b > 0.0) || !std::isfinite(inv_b)) throw domain_error("table_energy_eV: inv_b must be positive");
    potential_params p;
    p.b = 1.0 / inv_b;
    p.A = 2.0 * p.b;
    p.alpha = alpha;
    double const E = (alpha == 0.0 || alpha == 1.0) ? hulthen_energy(p, st, scheme) : energy_level(p, st, scheme).energy;
    // E / energy_unit is the dimensionless level; rescale to eV
    return -E / p.energy_unit() * energy_scale_eV(mol, p.b, u);
}

} // namespace mrpot
