#pragma once

#include <surjhom/classify.hpp>
#include <surjhom/endo.hpp>
#include <surjhom/figures.hpp>
#include <surjhom/io.hpp>

namespace surjhom {

auto to_json(const HamiltonCycle & c) -> json;
auto to_json(const Polymorphism & p) -> json;
auto to_json(const SpillCertificate & cert) -> json;
auto to_json(const HardnessChain & chain) -> json;
auto to_json(const Classification & c) -> json;
auto to_json(const Provenance & p) -> json;
auto to_json(const ReductionInstance & r) -> json;
auto to_json(const DaggerReport & d) -> json;
auto to_json(const FigureSearch & s) -> json;

/// Structure report: flags, component count, endomorphism counts by kind,
/// endo- and retract-triviality with counterexamples.
auto analyze(const Digraph & h) -> json;

/// Mixed-radix convention of every operation table.
auto codec_description(std::size_t base, std::size_t arity) -> json;

} // namespace surjhom
