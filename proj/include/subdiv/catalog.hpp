#pragma once

#include "subdiv/mask.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace subdiv {

struct SchemeRecord {
    std::string name;
    Mask mask;
    /// Documented C^m smoothness of the limit curves, when known.
    std::optional<int> documented_smoothness;

    friend bool operator==(const SchemeRecord&, const SchemeRecord&) = default;
};

/// Immutable set of named schemes.
class Catalog {
public:
    /// Throws DomainError on duplicate names.
    explicit Catalog(std::vector<SchemeRecord> records);

    /// The four reference schemes:
    ///   a  width-6 dual scheme with a complex eigenvalue pair, C0
    ///   b  its (1+z)/2 lift, C1
    ///   c  two-point (linear interpolation) scheme, C0
    ///   d  cubic B-spline scheme, C2
    static const Catalog& standard();

    /// A new catalog with extra user records appended.
    Catalog with(std::vector<SchemeRecord> extra) const;

    /// Throws NotFoundError for unknown names.
    const SchemeRecord& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    const std::vector<SchemeRecord>& records() const noexcept { return records_; }

private:
    std::vector<SchemeRecord> records_;
};

/// Lookup in the standard catalog.
const SchemeRecord& catalog_get(const std::string& name);

// Scheme files are JSON objects
//   {"name": str, "support_min": int, "coeffs": ["p/q", ...], "smoothness": int|null}
// with coefficients stored as exact rational strings.

std::string scheme_to_json(const SchemeRecord& record);
/// Throws ParseError naming the offending field (and line, for syntax errors).
SchemeRecord scheme_from_json(const std::string& text);

SchemeRecord load_scheme(const std::filesystem::path& path);
void save_scheme(const SchemeRecord& record, const std::filesystem::path& path);

/// Resolves "catalog:NAME" against the standard catalog, anything else as a file path.
SchemeRecord resolve_scheme(const std::string& source);

}  // namespace subdiv
