#include "gengeo/chart.hpp"

#include <set>

namespace gengeo {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(s[0])) return false;
    for (char c : s)
        if (!alnum(c)) return false;
    return true;
}

CoordChart::CoordChart(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("chart needs at least one coordinate");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n)) throw std::invalid_argument("invalid coordinate name: " + n);
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate coordinate name: " + n);
    }
}

int CoordChart::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

ChartPtr make_chart(std::vector<std::string> names) {
    return std::make_shared<const CoordChart>(std::move(names));
}

ChartPtr extend_chart(const ChartPtr& chart, const std::string& extra) {
    auto names = chart->names();
    names.push_back(extra);
    return make_chart(std::move(names));
}

} // namespace gengeo
