#include "tritile/classifier.hpp"
#include "tritile/generators.hpp"
#include "tritile/io.hpp"
#include "tritile/tiling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tritile;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_failure("cannot write " + path);
    out << content;
    if (!out) throw io_failure("error while writing " + path);
}

Triangle parse_ref(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 6)
        throw std::invalid_argument("--ref needs six comma-separated coordinates");
    auto p = [&](int i) { return Point{parse_quadnum(parts[2 * i]), parse_quadnum(parts[2 * i + 1])}; };
    return {p(0), p(1), p(2)};
}

TileDescriptor parse_tile(const std::vector<std::string>& words) {
    if (words.empty()) throw std::invalid_argument("--tile needs a descriptor");
    const std::string& kind = words[0];
    if (kind == "right-tan") {
        if (words.size() != 2)
            throw std::invalid_argument("right-tan needs a ratio, e.g. --tile right-tan 1/2");
        Rational r = parse_rational(words[1]);
        if (r.sign() <= 0) throw std::invalid_argument("tangent ratio must be positive");
        return TileDescriptor::right_tan(static_cast<long long>(r.num()),
                                         static_cast<long long>(r.den()));
    }
    if (words.size() != 1) throw std::invalid_argument("unexpected extra tile arguments");
    if (kind == "right-306090") return {TileDescriptor::Kind::right_306090};
    if (kind == "right-isosceles") return {TileDescriptor::Kind::right_isosceles, 1, 1};
    if (kind == "right-other") return {TileDescriptor::Kind::right_other};
    if (kind == "isosceles-30-30-120") return {TileDescriptor::Kind::isosceles_30_30_120};
    if (kind == "equilateral") return {TileDescriptor::Kind::equilateral};
    if (kind == "oblique-other") return {TileDescriptor::Kind::oblique_other};
    throw std::invalid_argument("unknown tile descriptor: " + kind);
}

TargetDescriptor parse_target(const std::string& word) {
    if (word == "similar") return {TargetDescriptor::Kind::similar_to_tile};
    if (word == "equilateral") return {TargetDescriptor::Kind::equilateral};
    if (word == "isosceles-half") return {TargetDescriptor::Kind::isosceles_with_tile_as_half};
    if (word == "isosceles-other") return {TargetDescriptor::Kind::isosceles_other};
    if (word == "other") return {TargetDescriptor::Kind::other};
    throw std::invalid_argument("unknown target descriptor: " + word);
}

int run(int argc, char** argv) {
    CLI::App app{"exact triangle tilings: generate, verify, classify, compose, render"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "construct a tiling from a named family");
    std::string family, gen_out, gen_svg, gen_ref;
    int opt_n = 0, opt_m = 0, opt_k = -1, opt_p = 0, opt_q = 0, opt_r = 0;
    std::string opt_scale = "1";
    gen->add_option("family", family,
                    "quadratic | biquadratic | hexagonal | equilateral-six | "
                    "right-306090-three | bisect | pythagorean")
        ->required();
    gen->add_option("--n", opt_n, "subdivision count / biquadratic n");
    gen->add_option("--m", opt_m, "biquadratic m");
    gen->add_option("--k", opt_k, "hexagonal k");
    gen->add_option("--p", opt_p, "Pythagorean leg p");
    gen->add_option("--q", opt_q, "Pythagorean leg q");
    gen->add_option("--r", opt_r, "Pythagorean hypotenuse r");
    gen->add_option("--scale", opt_scale, "side / scale (exact rational)");
    gen->add_option("--ref", gen_ref, "reference triangle x0,y0,x1,y1,x2,y2");
    gen->add_option("-o,--output", gen_out, "output tiling file")->required();
    gen->add_option("--svg", gen_svg, "also render to this SVG file");

    // verify
    auto* ver = app.add_subcommand("verify", "verify a tiling file and print a report");
    std::string ver_file;
    bool ver_json = false;
    ver->add_option("file", ver_file)->required();
    ver->add_flag("--json", ver_json, "emit the report as JSON");

    // classify
    auto* cls = app.add_subcommand("classify", "decide admissibility of (tile, target, N)");
    std::vector<std::string> cls_tile;
    std::string cls_target;
    unsigned long long cls_n = 0;
    bool cls_json = false;
    cls->add_option("--tile", cls_tile, "tile descriptor")->required()->expected(1, 2);
    cls->add_option("--target", cls_target, "target descriptor")->required();
    cls->add_option("--n", cls_n, "tile count N")->required();
    cls->add_flag("--json", cls_json, "emit the verdict as JSON");

    // compose
    auto* cmp = app.add_subcommand("compose", "substitute a tiling into each tile of another");
    std::string cmp_base, cmp_sub, cmp_out;
    cmp->add_option("base", cmp_base)->required();
    cmp->add_option("sub", cmp_sub)->required();
    cmp->add_option("-o,--output", cmp_out)->required();

    // catalog
    auto* cat = app.add_subcommand("catalog", "list or emit digitized exemplars");
    auto* cat_list = cat->add_subcommand("list", "list entry names");
    auto* cat_emit = cat->add_subcommand("emit", "write an entry to a file");
    std::string cat_name, cat_out;
    cat_emit->add_option("name", cat_name)->required();
    cat_emit->add_option("-o,--output", cat_out)->required();
    cat->require_subcommand(1);

    // render
    auto* ren = app.add_subcommand("render", "render a tiling file to SVG");
    std::string ren_file, ren_out;
    bool ren_vertices = false;
    ren->add_option("file", ren_file)->required();
    ren->add_option("-o,--output", ren_out)->required();
    ren->add_flag("--vertices", ren_vertices, "mark tiling vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (gen->parsed()) {
        Tiling t;
        if (family == "quadratic") {
            if (opt_n < 1) throw std::invalid_argument("quadratic needs --n >= 1");
            Triangle ref = gen_ref.empty()
                               ? Triangle{{QuadNum(0), QuadNum(0)}, {QuadNum(1), QuadNum(0)},
                                          {QuadNum(0), QuadNum(1)}}
                               : parse_ref(gen_ref);
            t = quadratic(ref, opt_n);
        } else if (family == "biquadratic") {
            if (opt_m < 1 || opt_n < 1)
                throw std::invalid_argument("biquadratic needs --m and --n");
            t = biquadratic(opt_m, opt_n);
        } else if (family == "hexagonal") {
            if (opt_k < 0) throw std::invalid_argument("hexagonal needs --k >= 0");
            t = hexagonal(opt_k);
        } else if (family == "equilateral-six") {
            t = equilateral_six(parse_rational(opt_scale));
        } else if (family == "right-306090-three") {
            t = right_306090_three(parse_rational(opt_scale));
        } else if (family == "bisect") {
            if (gen_ref.empty()) throw std::invalid_argument("bisect needs --ref");
            t = bisect_isosceles(parse_ref(gen_ref));
        } else if (family == "pythagorean") {
            t = pythagorean(opt_p, opt_q, opt_r);
        } else {
            throw std::invalid_argument("unknown family: " + family);
        }
        write_file(gen_out, tiling_to_json(t) + "\n");
        if (!gen_svg.empty()) write_file(gen_svg, render_svg(t));
        std::cout << "wrote " << gen_out << " with N=" << t.n() << "\n";
        return 0;
    }

    if (ver->parsed()) {
        Tiling t = tiling_from_json(read_file(ver_file));
        Report rep = verify(t);
        std::cout << (ver_json ? report_to_json(rep) + "\n"
                               : "N=" + std::to_string(t.n()) + "\n" + report_to_text(rep));
        return rep.all_ok() ? 0 : kExitNegative;
    }

    if (cls->parsed()) {
        Verdict v = classify(parse_tile(cls_tile), parse_target(cls_target), cls_n);
        if (cls_json) {
            std::cout << verdict_to_json(v) << "\n";
        } else {
            std::cout << v.status_str();
            if (v.witness) std::cout << " (" << v.witness->family() << ")";
            std::cout << "\n";
            if (!v.citation.empty()) std::cout << "citation: " << v.citation << "\n";
            if (v.witness) std::cout << "witness: " << v.witness->str() << "\n";
            for (const std::string& note : v.notes) std::cout << "note: " << note << "\n";
        }
        return v.status == Verdict::Status::admissible ? 0 : kExitNegative;
    }

    if (cmp->parsed()) {
        Tiling base = tiling_from_json(read_file(cmp_base));
        Tiling sub = tiling_from_json(read_file(cmp_sub));
        Tiling out = compose(base, sub);
        write_file(cmp_out, tiling_to_json(out) + "\n");
        std::cout << "wrote " << cmp_out << " with N=" << out.n() << "\n";
        return 0;
    }

    if (cat->parsed()) {
        if (cat_list->parsed()) {
            for (const std::string& name : catalog_names()) std::cout << name << "\n";
            return 0;
        }
        Tiling t = catalog(cat_name);
        write_file(cat_out, tiling_to_json(t) + "\n");
        std::cout << "wrote " << cat_out << " with N=" << t.n() << "\n";
        return 0;
    }

    if (ren->parsed()) {
        Tiling t = tiling_from_json(read_file(ren_file));
        write_file(ren_out, render_svg(t, ren_vertices));
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const io_failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
