#include "fordcf/svg.hpp"

#include "fordcf/ford.hpp"
#include "fordcf/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fordcf {

namespace {

constexpr int kPlaces = 6;
constexpr long kMarkerBand = 16;

std::string fmt(const Rational& v) {
    return to_fixed(v, kPlaces);
}

std::vector<Rational> field_bases(const RenderSpec& spec) {
    std::vector<Rational> out;
    for (std::size_t den = 1; den <= spec.max_den; ++den) {
        Integer d(static_cast<unsigned long>(den));
        Integer last = floor(spec.hi * Rational(d));
        for (Integer c = ceil(spec.lo * Rational(d)); c <= last; ++c) {
            if (coprime(c, d)) {
                out.push_back(make_rational(c, d));
            }
        }
    }
    return out;
}

// Maps the mathematical plane onto pixels: x in [lo, hi] -> [0, width], the
// real axis at y = axis_, upward flipped, uniform scale so circles stay round.
class Canvas {
public:
    Canvas(const RenderSpec& spec, const std::vector<Rational>& bases)
        : spec_(spec), scale_(Rational(static_cast<long>(spec.width_px)) / (spec.hi - spec.lo)) {
        Rational tallest = 0;
        for (const Rational& b : bases) {
            tallest = std::max(tallest, Rational(2) * ford_circle(b).radius);
        }
        if (tallest.sign() == 0) {
            tallest = 1;
        }
        axis_ = tallest * scale_;
        height_ = axis_ + Rational(kMarkerBand);
    }

    Rational px(const Rational& x) const { return (x - spec_.lo) * scale_; }
    Rational py(const Rational& y) const { return axis_ - y * scale_; }
    const Rational& scale() const { return scale_; }

    void open(std::ostream& out, const nlohmann::ordered_json& meta) const {
        std::string w = std::to_string(spec_.width_px);
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
            << "\" height=\"" << fmt(height_) << "\" viewBox=\"0 0 " << w << ' '
            << fmt(height_) << "\">\n"
            << "<metadata>" << meta.dump() << "</metadata>\n"
            << "<line class=\"axis\" x1=\"0.000000\" y1=\"" << fmt(axis_) << "\" x2=\""
            << fmt(Rational(static_cast<long>(spec_.width_px))) << "\" y2=\"" << fmt(axis_)
            << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }

    void circle(std::ostream& out, const Rational& base) const {
        FordCircle c = ford_circle(base);
        out << "<circle cx=\"" << fmt(px(c.base)) << "\" cy=\"" << fmt(py(c.radius))
            << "\" r=\"" << fmt(c.radius * scale_) << "\" data-base=\"" << to_string(base)
            << "\"/>\n";
    }

    void marker(std::ostream& out, const Rational& at) const {
        Rational x = px(at);
        Rational base = axis_ + Rational(10);
        out << "<path class=\"alpha-marker\" d=\"M " << fmt(x) << ',' << fmt(axis_) << " L "
            << fmt(x - Rational(5)) << ',' << fmt(base) << " L " << fmt(x + Rational(5)) << ','
            << fmt(base) << " Z\" fill=\"#cc0000\"/>\n";
    }

    void segment(std::ostream& out, const Rational& from, const Rational& to) const {
        out << "<line class=\"interval\" x1=\"" << fmt(px(from)) << "\" y1=\"" << fmt(axis_)
            << "\" x2=\"" << fmt(px(to)) << "\" y2=\"" << fmt(axis_)
            << "\" stroke=\"#cc0000\" stroke-width=\"3\"/>\n";
    }

    static void close(std::ostream& out) { out << "</svg>\n"; }

private:
    const RenderSpec& spec_;
    Rational scale_;
    Rational axis_;
    Rational height_;
};

// Pixel-exact position for a marker at alpha.
Rational marker_position(const RealNumber& alpha, const Canvas& canvas) {
    Rational tolerance = (canvas.scale() * Rational(10'000'000)).reciprocal();
    return approximate(alpha, tolerance);
}

void write_field(std::ostream& out, const Canvas& canvas, const std::vector<Rational>& bases,
                 const RenderSpec& spec, const char* cls, const char* stroke) {
    out << "<g class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1\">\n";
    for (const Rational& b : bases) {
        if (std::find(spec.highlight.begin(), spec.highlight.end(), b) == spec.highlight.end()) {
            canvas.circle(out, b);
        }
    }
    out << "</g>\n";
    bool any = std::any_of(bases.begin(), bases.end(), [&](const Rational& b) {
        return std::find(spec.highlight.begin(), spec.highlight.end(), b) != spec.highlight.end();
    });
    if (any) {
        out << "<g class=\"highlight\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n";
        for (const Rational& b : bases) {
            if (std::find(spec.highlight.begin(), spec.highlight.end(), b) !=
                spec.highlight.end()) {
                canvas.circle(out, b);
            }
        }
        out << "</g>\n";
    }
}

}  // namespace

void RenderSpec::validate() const {
    if (!(lo < hi)) {
        throw std::invalid_argument("invalid render spec: window needs lo < hi");
    }
    if (max_den < 1) {
        throw std::invalid_argument("invalid render spec: max denominator must be >= 1");
    }
    if (width_px < 64) {
        throw std::invalid_argument("invalid render spec: width must be >= 64 px");
    }
}

std::string render_ford_field(const RenderSpec& spec) {
    spec.validate();
    std::vector<Rational> bases = field_bases(spec);
    Canvas canvas(spec, bases);
    nlohmann::ordered_json meta;
    meta["figure"] = "ford-field";
    meta["window"] = to_string(spec.lo) + ".." + to_string(spec.hi);
    meta["maxDen"] = spec.max_den;
    meta["circles"] = bases.size();

    std::ostringstream out;
    canvas.open(out, meta);
    write_field(out, canvas, bases, spec, "ford-field", "#333333");
    if (spec.annotate) {
        canvas.marker(out, *spec.annotate);
    }
    Canvas::close(out);
    return out.str();
}

std::string render_chain(const RealNumber& alpha, std::size_t depth, const RenderSpec& spec) {
    spec.validate();
    std::vector<ChainEntry> chain = cf_chain(alpha, depth);
    std::vector<Rational> bases = field_bases(spec);
    std::vector<Rational> all = bases;
    nlohmann::ordered_json meta;
    meta["figure"] = "chain";
    meta["alpha"] = alpha.description();
    meta["depth"] = depth;
    meta["chain"] = nlohmann::ordered_json::array();
    for (const ChainEntry& e : chain) {
        all.push_back(e.circle.base);
        meta["chain"].push_back(to_string(e.circle.base));
    }
    Canvas canvas(spec, all);

    std::ostringstream out;
    canvas.open(out, meta);
    RenderSpec muted = spec;
    muted.highlight.clear();
    write_field(out, canvas, bases, muted, "ford-field", "#bbbbbb");
    out << "<g class=\"chain\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n";
    for (const ChainEntry& e : chain) {
        canvas.circle(out, e.circle.base);
    }
    out << "</g>\n";
    canvas.marker(out, spec.annotate ? *spec.annotate : marker_position(alpha, canvas));
    Canvas::close(out);
    return out.str();
}

std::string render_statement_v(const Rational& x, const RealNumber& alpha,
                               const RenderSpec& spec) {
    spec.validate();
    std::optional<Rational> witness = statement_v_witness(x, alpha);
    if (!witness) {
        throw std::domain_error("statement (v) fails for this pair");
    }
    Canvas canvas(spec, {x, *witness});
    nlohmann::ordered_json meta;
    meta["figure"] = "statement-v";
    meta["x"] = to_string(x);
    meta["alpha"] = alpha.description();
    meta["witness"] = to_string(*witness);

    std::ostringstream out;
    canvas.open(out, meta);
    canvas.segment(out, std::min(x, *witness), std::max(x, *witness));
    out << "<g class=\"x\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n";
    canvas.circle(out, x);
    out << "</g>\n<g class=\"witness\" fill=\"none\" stroke=\"#0044aa\" stroke-width=\"2\">\n";
    canvas.circle(out, *witness);
    out << "</g>\n";
    canvas.marker(out, spec.annotate ? *spec.annotate : marker_position(alpha, canvas));
    Canvas::close(out);
    return out.str();
}

}  // namespace fordcf
