#pragma once

#include <string>

#include <json.hpp>

namespace spinfw::cli
{

//! One-line statement of what an acceptance criterion measures.
char const* criterion_summary(int id);

//! Human-readable report from a results JSON document.
std::string render_report(nlohmann::json const& results);

//! One line per check: PASS/FAIL, criterion, name, value vs tolerance.
std::string check_line(nlohmann::json const& check);

//! Canonical JSON text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(nlohmann::json const& j);

void write_text(std::string const& path, std::string const& text);
nlohmann::json read_json(std::string const& path);

}  // namespace spinfw::cli
