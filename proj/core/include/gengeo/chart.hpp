#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gengeo {

/// A coordinate chart: an ordered list of distinct coordinate names.
/// All indices in the library are 0-based.
class CoordChart {
public:
    explicit CoordChart(std::vector<std::string> names);

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a coordinate name, -1 if absent.
    int index_of(const std::string& name) const;

    bool operator==(const CoordChart& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using ChartPtr = std::shared_ptr<const CoordChart>;

ChartPtr make_chart(std::vector<std::string> names);

/// Chart with one extra coordinate appended (used for time-dependent fields).
ChartPtr extend_chart(const ChartPtr& chart, const std::string& extra);

/// True for identifiers matching [A-Za-z_][A-Za-z0-9_]*.
bool valid_identifier(const std::string& s);

struct ChartMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw ChartMismatch("operands live on different charts");
}

} // namespace gengeo
