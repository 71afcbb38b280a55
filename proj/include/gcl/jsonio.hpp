#pragma once

#include "gcl/verify.hpp"

namespace gcl {

// Job configuration shared by the CLI subcommands.
struct JobConfig {
    int n = 3;
    std::map<int, int> gamma;
    Convention convention = Convention::H;
    Group group = Group::GL;
    R0Mode r0_mode = R0Mode::Generic;
    int points = 3;
    std::uint64_t seed = 20260810;
    int symbolic_cap = 4;

    BDTriple triple() const { return BDTriple::validate(n, gamma); }
};

struct ConfigError : GclError {
    using GclError::GclError;
};

// Parses and validates; throws ConfigError with "line L column C" context on
// malformed JSON, and the violated-field name on semantic errors.
JobConfig load_config(const std::string& path);
JobConfig parse_config_text(const std::string& text);
std::string dump_config(const JobConfig& cfg);

std::string triple_json(const BDTriple& t);
std::string seed_json(const InitialSeed& init, const Seed& s);
std::string report_json(const Report& r);

// Parse an exported quiver JSON and re-emit it in canonical form; the
// round-trip export -> import -> export is byte-identical.
std::string reexport_quiver_json(const std::string& text);

}  // namespace gcl
