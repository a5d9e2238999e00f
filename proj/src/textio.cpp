#include "eip/textio.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eip {

namespace {

int parse_int(std::string_view text, size_t& pos, const char* what) {
    int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin)
        throw std::invalid_argument(std::string("expected integer in ") + what);
    pos += static_cast<size_t>(ptr - begin);
    return value;
}

void expect(std::string_view text, size_t& pos, char c, const char* what) {
    if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument(std::string("expected '") + c + "' in " + what);
    ++pos;
}

} // namespace

std::string format_system(const IntervalSystem& sys) {
    std::string out = std::to_string(sys.n());
    out += ':';
    bool first = true;
    for (const Edge& e : sys.edges()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(e.first);
        out += '-';
        out += std::to_string(e.second);
    }
    return out;
}

IntervalSystem parse_system(const std::string& text) {
    size_t pos = 0;
    const int n = parse_int(text, pos, "system");
    expect(text, pos, ':', "system");
    std::vector<Edge> edges;
    while (pos < text.size()) {
        if (!edges.empty()) expect(text, pos, ',', "system");
        const int a = parse_int(text, pos, "system");
        expect(text, pos, '-', "system");
        const int b = parse_int(text, pos, "system");
        edges.emplace_back(a, b);
    }
    return IntervalSystem(n, std::move(edges));
}

std::string format_hypergraph(const IntervalHypergraph& h) {
    std::string out = std::to_string(h.n());
    out += ':';
    bool first = true;
    for (const auto& edge : h.edges()) {
        if (!first) out += ',';
        first = false;
        out += '{';
        bool inner_first = true;
        for (int v : edge) {
            if (!inner_first) out += ',';
            inner_first = false;
            out += std::to_string(v);
        }
        out += '}';
    }
    return out;
}

IntervalHypergraph parse_hypergraph(const std::string& text) {
    size_t pos = 0;
    const int n = parse_int(text, pos, "hypergraph");
    expect(text, pos, ':', "hypergraph");
    std::vector<std::vector<int>> edges;
    while (pos < text.size()) {
        if (!edges.empty()) expect(text, pos, ',', "hypergraph");
        expect(text, pos, '{', "hypergraph");
        std::vector<int> edge;
        for (;;) {
            edge.push_back(parse_int(text, pos, "hypergraph"));
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(text, pos, '}', "hypergraph");
        edges.push_back(std::move(edge));
    }
    return IntervalHypergraph(n, std::move(edges));
}

std::string format_double(double x) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        const int len = std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        double parsed = 0.0;
        std::from_chars(buf, buf + len, parsed);
        if (parsed == x) return std::string(buf, static_cast<size_t>(len));
    }
    return buf;
}

void write_limitset(std::ostream& out, const LimitSet& k) {
    out << "limitset v1 n_points=" << k.points().size() << '\n';
    for (const Point& p : k.points())
        out << format_double(p.first) << ' ' << format_double(p.second) << '\n';
}

LimitSet read_limitset(std::istream& in) {
    std::string word;
    if (!(in >> word) || word != "limitset") throw std::invalid_argument("limitset: bad magic");
    if (!(in >> word) || word != "v1") throw std::invalid_argument("limitset: bad version");
    if (!(in >> word) || word.rfind("n_points=", 0) != 0)
        throw std::invalid_argument("limitset: missing n_points");
    const long count = std::stol(word.substr(9));
    if (count < 0) throw std::invalid_argument("limitset: negative n_points");
    std::vector<Point> points;
    points.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        double x = 0.0, y = 0.0;
        if (!(in >> x >> y)) throw std::invalid_argument("limitset: truncated point list");
        points.emplace_back(x, y);
    }
    return LimitSet(std::move(points));
}

std::string render_limitset_svg(const LimitSet& k, double marker_radius) {
    constexpr double kSize = 512.0;
    constexpr double kPad = 24.0;
    const double span = kSize - 2 * kPad;
    const auto px = [&](double x) { return kPad + x * span; };
    const auto py = [&](double y) { return kSize - kPad - y * span; };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    svg << "  <polygon points=\"" << px(0) << ',' << py(0) << ' ' << px(0) << ',' << py(1) << ' '
        << px(1) << ',' << py(1) << "\" fill=\"#f4f4f4\" stroke=\"#888\"/>\n";
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\""
        << py(1) << "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
    for (const Point& p : k.points())
        svg << "  <circle cx=\"" << px(p.first) << "\" cy=\"" << py(p.second) << "\" r=\""
            << marker_radius << "\" fill=\"#1f6fb2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace eip
