#include "toric_ic/cli.hpp"

#include "toric_ic/error.hpp"
#include "toric_ic/hypersurface.hpp"
#include "toric_ic/ic_stalks.hpp"
#include "toric_ic/lattice_count.hpp"
#include "toric_ic/prime_cut.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace toric {

Report exact(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

Report exact(const Rat& x) { return to_string(x); }

Report exact(const RatVector& v) {
    Report a = Report::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

Report exact(const LatticeVector& v) {
    Report a = Report::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

Report exact(const TatePoly& p) {
    Report coeffs = Report::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(exact(p.coeff(k)));
    return {{"text", p.to_string()}, {"coeffs", coeffs}};
}

Report exact(const EPoly2& e) {
    Report terms = Report::array();
    for (const auto& [pq, c] : e.terms()) terms.push_back({pq.first, pq.second, exact(c)});
    return {{"text", e.to_string()}, {"terms", terms}};
}

namespace {

const char* shape_name(Shape s) {
    switch (s) {
    case Shape::compact: return "compact";
    case Shape::cone_with_vertex: return "cone";
    case Shape::other: return "other";
    }
    return "?";
}

Report ids(const std::vector<int>& v) { return Report(v); }

Report integers(const std::vector<Integer>& v) {
    Report a = Report::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

Report summands(const SummandTable& t) {
    Report a = Report::array();
    for (const auto& e : t) a.push_back({{"j", e.degree}, {"rank", exact(e.rank)}, {"twist", e.twist}});
    return a;
}

int first_cone_vertex(const FaceLattice& lattice) { return lattice.face(lattice.apex()).vertex_ids.front(); }

}  // namespace

Report faces_report(const Polytope& p, const FaceLattice& lattice) {
    Report r;
    r["ambient_dim"] = p.ambient_dim();
    r["shape"] = shape_name(lattice.shape());
    Report verts = Report::array();
    for (const auto& v : p.vertices()) verts.push_back(exact(v));
    r["vertices"] = verts;
    Report rays = Report::array();
    for (const auto& v : p.rays()) rays.push_back(exact(v));
    r["rays"] = rays;
    Report facets = Report::array();
    for (std::size_t k = 0; k < p.facets().size(); ++k)
        facets.push_back({{"id", k}, {"normal", exact(p.facets()[k].normal)}, {"offset", exact(p.facets()[k].offset)}});
    r["facets"] = facets;
    r["f_vector"] = integers(lattice.f_vector());
    Report faces = Report::array();
    for (int id : lattice.report_order()) {
        const Face& f = lattice.face(id);
        faces.push_back({{"id", id},
                         {"dim", f.dim},
                         {"codim", f.codim},
                         {"vertices", ids(f.vertex_ids)},
                         {"rays", ids(f.ray_ids)},
                         {"facets", ids(f.active_set)}});
    }
    r["faces"] = faces;
    r["prime"] = p.is_compact() && is_prime(p, lattice);
    return r;
}

Report fan_report(const Polytope& p, const FaceLattice& lattice) {
    const Fan fan = normal_fan(p, lattice);
    Report cones = Report::array();
    for (int id : lattice.report_order()) {
        const FanCone& c = fan.cones[id];
        Report rays = Report::array();
        for (const auto& x : c.rays) rays.push_back(exact(x));
        cones.push_back({{"face", c.face},
                         {"dim", c.dim},
                         {"rays", rays},
                         {"simplicial", static_cast<int>(c.rays.size()) == c.dim},
                         {"smooth", is_smooth_cone(c.rays)}});
    }
    Report r;
    r["ambient_dim"] = fan.ambient_dim;
    r["complete"] = p.is_compact();
    r["cones"] = cones;
    return r;
}

Report stalks_report(const FaceLattice& lattice) {
    const auto m = local_ic_polynomials(lattice);
    Report faces = Report::array();
    for (int id : lattice.report_order()) {
        const Face& f = lattice.face(id);
        faces.push_back({{"face", id}, {"dim", f.dim}, {"codim", f.codim}, {"m", exact(m[id])}});
    }
    Report table = Report::array();
    for (const auto& e : stalk_table(lattice))
        table.push_back({{"face", e.face}, {"j", e.degree}, {"rank", exact(e.rank)}, {"twist", e.twist}});
    Report r;
    r["faces"] = faces;
    r["table"] = table;
    return r;
}

Report ih_report(const FaceLattice& lattice) {
    Report r;
    const int d = lattice.face(FaceLattice::top()).dim;
    if (lattice.shape() == Shape::compact) {
        const TatePoly h = global_ih_class(lattice);
        r["dim"] = d;
        r["class"] = exact(h);
        r["betti"] = integers(ih_betti_numbers(lattice));
        r["primitive"] = exact(primitive_parts(h, d));
        return r;
    }
    if (lattice.shape() != Shape::cone_with_vertex)
        throw Error(Errc::unsupported_shape, "IH needs a compact polytope or a cone with a vertex");
    const auto pc = punctured_cone_classes(lattice);
    r["dim"] = d;
    r["apex_stalk"] = exact(local_ic_polynomial(lattice, lattice.apex()));
    r["punctured_ih"] = exact(pc.ih);
    r["punctured_ihc"] = exact(pc.ihc);
    r["exceptional_divisor"] = exact(exceptional_divisor_class(lattice));
    r["summands"] = summands(decomposition_summands(lattice));
    return r;
}

Report ehrhart_report(const Polytope& p, const FaceLattice& lattice) {
    const CountReport c = count_report(p, lattice);
    Report faces = Report::array();
    for (const auto& f : c.faces)
        faces.push_back({{"face", f.face}, {"dim", lattice.face(f.face).dim}, {"points", exact(f.points)},
                         {"interior", exact(f.interior)}});
    Report r;
    r["faces"] = faces;
    r["skeleton"] = exact(c.skeleton);
    if (!c.ehrhart_coeffs.empty()) {
        r["ehrhart_values"] = integers(c.ehrhart_values);
        r["ehrhart_coeffs"] = exact(RatVector(c.ehrhart_coeffs));
        r["reciprocity"] = reciprocity_check(p, 3);
    }
    return r;
}

Report hypersurface_report(const Polytope& p, const FaceLattice& lattice, int components) {
    const int n = p.ambient_dim();
    Report r;
    Report verts = Report::array();
    for (const auto& v : p.vertices()) verts.push_back(exact(v));
    r["newton_vertices"] = verts;
    r["dim"] = n;
    r["genus"] = exact(geometric_genus_count(p));
    r["skeleton"] = exact(skeleton_count(p, lattice));
    if (n >= 2) {
        Report frontier;
        for (const auto& [q, v] : frontier_hodge(p, lattice)) frontier[std::to_string(q)] = exact(v);
        r["frontier"] = frontier;
        Report table = Report::array();
        for (const auto& e : high_weight_table(n))
            table.push_back({{"j", e.j}, {"p", e.p}, {"q", e.q}, {"value", exact(e.value)}});
        r["high_weight"] = table;
        const auto x = frontier_crosscheck(p, lattice);
        r["crosscheck"] = {{"vertices", exact(x.vertices)},
                           {"edge_interior", exact(x.edge_interior)},
                           {"p0_chase", exact(x.p0_chase)},
                           {"p0_frontier", exact(x.p0_frontier)},
                           {"ok", x.ok}};
    }
    if (n == 2) {
        r["components"] = components;
        r["e_polynomial"] = exact(curve_e_polynomial(p, lattice, components));
    }
    return r;
}

Report prime_cut_report(const Polytope& p, const FaceLattice& lattice, const Rat& epsilon) {
    const CutSpec spec = choose_cut_functionals(p, lattice);
    const CutResult res = prime_cut(p, lattice, spec, epsilon);
    Report r;
    Report cuts = Report::array();
    for (const auto& c : spec.cuts)
        cuts.push_back({{"face", c.face}, {"normal", exact(c.normal)}, {"base_value", exact(c.base_value)},
                        {"order", c.order}});
    r["cuts"] = cuts;
    r["epsilon"] = exact(res.epsilon);
    r["rounds"] = res.rounds;
    Report verts = Report::array();
    for (const auto& v : res.cut.vertices()) verts.push_back(exact(v));
    r["vertices"] = verts;
    r["f_vector"] = integers(res.lattice.f_vector());
    r["prime"] = is_prime(res.cut, res.lattice);
    r["refines"] = fan_refines(res.cut, res.lattice, p, lattice);
    Report map = Report::array();
    for (int id : res.lattice.report_order())
        map.push_back({{"face", id}, {"dim", res.lattice.face(id).dim}, {"image", res.face_map[id]},
                       {"image_dim", lattice.face(res.face_map[id]).dim}});
    r["face_map"] = map;
    const auto mult = prime_cut_multipliers(res.face_map, lattice, res.lattice);
    Report m = Report::array();
    for (int id : lattice.report_order()) m.push_back({{"face", id}, {"multiplier", exact(mult[id])}});
    r["multipliers"] = m;
    return r;
}

Report blowup_report(const Polytope& cone, const FaceLattice& lattice, const LatticeVector& v, const Rat& c) {
    const VertexBlowup b = vertex_blowup(cone, lattice, v, c);
    Report r;
    r["functional"] = exact(v);
    r["level"] = exact(c);
    Report cut = Report::array();
    for (const auto& x : b.cut.vertices()) cut.push_back(exact(x));
    r["cut_vertices"] = cut;
    Report sec = Report::array();
    for (const auto& x : b.section.vertices()) sec.push_back(exact(x));
    r["section_vertices"] = sec;
    r["section_f_vector"] = integers(b.section_lattice.f_vector());
    const TatePoly via_section = global_ih_class(b.section_lattice);
    const TatePoly via_cone = exceptional_divisor_class(lattice);
    r["section_class"] = exact(via_section);
    r["cone_class"] = exact(via_cone);
    r["agree"] = via_section == via_cone;
    r["summands"] = summands(decomposition_summands(via_section, cone.ambient_dim()));
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct Outcome {
    std::string status;
    std::string detail;
};

Outcome pass(std::string d = {}) { return {"pass", std::move(d)}; }
Outcome fail(std::string d) { return {"fail", std::move(d)}; }
Outcome skip(std::string d) { return {"skip", std::move(d)}; }

template <class F>
void add_check(Report& out, const std::string& name, F&& f) {
    Outcome o;
    try {
        o = f();
    } catch (const Error& e) {
        o = fail(std::string(errc_name(e.code())) + ": " + e.what());
    }
    out.push_back({{"check", name}, {"status", o.status}, {"detail", o.detail}});
}

// Grading by covers and the alternating face count.
Outcome check_grading(const Polytope& p, const FaceLattice& L) {
    for (const auto& f : L.faces()) {
        if (f.dim + f.codim != p.ambient_dim()) return fail("dim + codim != n at face " + std::to_string(f.id));
        for (int up : L.covers_up(f.id))
            if (L.face(up).dim != f.dim + 1) return fail("cover skips a dimension at face " + std::to_string(f.id));
    }
    return pass();
}

Outcome check_euler(const FaceLattice& L) {
    const auto v = euler_relation_check(L);
    if (!v.empty()) return fail(std::to_string(v.size()) + " faces violate the alternating sum");
    if (L.shape() == Shape::compact) {
        long chi = 0;
        for (const auto& f : L.faces()) chi += f.dim % 2 ? -1 : 1;
        if (chi != 1) return fail("alternating face count is " + std::to_string(chi));
    }
    return pass();
}

Outcome check_closed_open(const FaceLattice& L) {
    FaceAssignment a(L.size());
    for (const auto& f : L.faces()) a[f.id] = EPoly2::monomial(f.dim, f.dim, f.id + 1) - EPoly2(f.codim);
    if (!alternating_identity_holds(L, a)) return fail("alternating sum differs from the open class");
    const auto closed = closed_open_transform(L, a, Direction::open_to_closed);
    if (closed_open_transform(L, closed, Direction::closed_to_open) != a) return fail("inversion is not exact");
    return pass();
}

Outcome check_stalks(const Polytope& p, const FaceLattice& L) {
    const auto m = local_ic_polynomials(L);
    if (p.is_compact() && is_prime(p, L))
        for (const auto& x : m)
            if (x != TatePoly(1)) return fail("prime polytope with nontrivial stalk " + x.to_string());
    return pass();
}

Outcome check_cone_correspondence(const Polytope& p, const FaceLattice& L) {
    const ConeOverPolytope c = cone_over_polytope(p);
    FaceLattice cl(c.cone);
    const auto mq = local_ic_polynomials(L);
    const auto mc = local_ic_polynomials(cl);
    // Cone rays are listed in vertex order.
    for (const auto& tau : L.faces()) {
        const int s = cl.closure({first_cone_vertex(cl)}, tau.vertex_ids);
        if (s < 0 || cl.face(s).dim != tau.dim + 1) return fail("no cone face over face " + std::to_string(tau.id));
        if (mc[s] != mq[tau.id]) return fail("stalks differ at face " + std::to_string(tau.id));
    }
    return pass();
}

Outcome check_prime_cut(const Polytope& p, const FaceLattice& L) {
    const CutResult r = prime_cut(p, L, choose_cut_functionals(p, L), Rat(1, 4));
    if (!is_prime(r.cut, r.lattice)) return fail("cut is not prime");
    if (!fan_refines(r.cut, r.lattice, p, L)) return fail("normal fan does not refine");
    for (const auto& a : r.lattice.faces())
        for (const auto& b : r.lattice.faces())
            if (r.lattice.leq(a.id, b.id) && !L.leq(r.face_map[a.id], r.face_map[b.id]))
                return fail("face map does not respect inclusion");
    return pass("epsilon " + to_string(r.epsilon));
}

Outcome check_ehrhart(const Polytope& p) {
    if (!p.is_lattice()) return skip("rational vertices");
    if (!reciprocity_check(p, 3)) return fail("reciprocity fails for some k <= 3");
    const auto poly = ehrhart_polynomial(p);
    const auto cone = cone_over_polytope(p);
    for (int k = 0; k <= 3; ++k)
        if (Rat(count_at_grade(cone, k)) != poly(Rat(k))) return fail("grade " + std::to_string(k) + " slice count");
    return pass();
}

}  // namespace

Report check_report(const ParsedInput& in, const Polytope& p, const FaceLattice& L) {
    Report out = Report::array();
    const Shape shape = L.shape();
    const int n = p.ambient_dim();
    add_check(out, "face_grading", [&] { return check_grading(p, L); });
    add_check(out, "euler_relation", [&] { return check_euler(L); });
    add_check(out, "closed_open_identity", [&] { return check_closed_open(L); });
    if (shape == Shape::other) {
        add_check(out, "stalk_invariants", [] { return skip("unsupported shape"); });
        return out;
    }
    add_check(out, "stalk_invariants", [&] { return check_stalks(p, L); });

    if (shape == Shape::cone_with_vertex) {
        add_check(out, "punctured_classes", [&] {
            (void)punctured_cone_classes(L);
            return pass();
        });
        add_check(out, "summand_symmetry", [&] {
            (void)decomposition_summands(L);
            return pass();
        });
        add_check(out, "blowup_two_paths", [&] {
            if (n < 2) return skip("dimension 1");
            // Sum of facet normals is positive on every ray.
            LatticeVector v(n, Integer(0));
            for (const auto& f : p.facets())
                for (int i = 0; i < n; ++i) v[i] += f.normal[i];
            const auto b = vertex_blowup(p, L, v, Rat(1));
            return global_ih_class(b.section_lattice) == exceptional_divisor_class(L)
                       ? pass()
                       : fail("section class differs from the cone computation");
        });
        return out;
    }

    add_check(out, "global_class", [&] {
        return pass(global_ih_class(L).to_string());
    });
    add_check(out, "cone_correspondence", [&] { return check_cone_correspondence(p, L); });
    add_check(out, "prime_cut", [&] { return check_prime_cut(p, L); });
    add_check(out, "ehrhart_reciprocity", [&] { return check_ehrhart(p); });
    add_check(out, "skeleton_identity", [&] {
        return pass("skeleton " + to_string(skeleton_count(p, L)));
    });
    add_check(out, "frontier_crosscheck", [&] {
        if (!p.is_lattice() || n < 2) return skip("needs a lattice polytope of dimension >= 2");
        const auto x = frontier_crosscheck(p, L);
        if (!x.ok) return fail("dimension chase disagrees with the frontier count");
        if (frontier_hodge(p, L).at(n - 1) != geometric_genus_count(p)) return fail("top frontier entry != genus");
        return pass();
    });
    add_check(out, "curve_euler_characteristic", [&] {
        if (!p.is_lattice() || n != 2) return skip("needs a lattice polygon");
        const auto e = curve_e_polynomial(p, L);
        const Integer chi = 2 - 2 * count_interior_lattice_points(p) - skeleton_count(p, L);
        if (!e.is_symmetric() || e.evaluate(1, 1) != chi) return fail("E(1,1) != 2 - 2l* - Pi");
        return pass();
    });
    if (in.kind == InputKind::support)
        add_check(out, "newton_vertices_in_support", [&] {
            for (const auto& v : p.vertices())
                if (!is_integral(v) ||
                    !std::binary_search(in.support.exponents.begin(), in.support.exponents.end(), to_lattice(v)))
                    return fail("vertex outside the support");
            return pass();
        });
    return out;
}

bool check_passed(const Report& checks) {
    return std::none_of(checks.begin(), checks.end(), [](const Report& c) { return c["status"] == "fail"; });
}

// ---------------------------------------------------------------------------

namespace {

bool is_scalar(const Report& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Report& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Report& x) { return is_scalar(x); });
}

std::string scalar_text(const Report& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string flat_text(const Report& j) {
    if (is_scalar(j)) return scalar_text(j);
    if (j.empty()) return "[]";
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : " ") + scalar_text(x);
    return s;
}

// One line per object whose values are all scalars or flat arrays.
bool is_row(const Report& j) {
    if (!j.is_object()) return false;
    for (const auto& [k, v] : j.items()) {
        if (is_scalar(v) || is_flat_array(v)) continue;
        if (v.is_object() && v.contains("text")) continue;  // polynomial
        return false;
    }
    return true;
}

std::string row_text(const Report& j) {
    std::string s;
    for (const auto& [k, v] : j.items()) {
        std::string val = v.is_object() ? v["text"].get<std::string>() : flat_text(v);
        if (v.is_array() && !v.empty()) val = "[" + val + "]";
        s += (s.empty() ? "" : "  ") + k + "=" + val;
    }
    return s;
}

void render(const Report& j, int indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_scalar(v) || is_flat_array(v)) {
                out += pad + k + ": " + flat_text(v) + "\n";
            } else if (v.is_object() && v.contains("text")) {
                out += pad + k + ": " + v["text"].get<std::string>() + "\n";
            } else {
                out += pad + k + ":\n";
                render(v, indent + 2, out);
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto& x : j) {
            if (is_scalar(x) || is_flat_array(x)) out += pad + "- " + flat_text(x) + "\n";
            else if (is_row(x)) out += pad + "- " + row_text(x) + "\n";
            else {
                out += pad + "-\n";
                render(x, indent + 2, out);
            }
        }
        return;
    }
    out += pad + scalar_text(j) + "\n";
}

int exit_code_for(const Error& e) {
    return e.code() == Errc::invariant_violation || e.code() == Errc::epsilon_unstable ? 2 : 1;
}

LatticeVector parse_functional(const std::string& text, int n) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    LatticeVector v;
    for (std::string t; in >> t;) v.push_back(parse_integer(t));
    if (static_cast<int>(v.size()) != n)
        throw Error(Errc::dimension_mismatch, "functional needs " + std::to_string(n) + " entries");
    return v;
}

}  // namespace

std::string render_text(const Report& r) {
    std::string out;
    render(r, 0, out);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection cohomology and Hodge numbers from toric combinatorics", "toric-ic"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "Write the report to this file");

    std::string input;
    std::string epsilon_text = "1/4";
    std::string functional_text;
    std::string level_text = "1";
    int components = 1;

    struct Command {
        const char* name;
        const char* help;
    };
    const std::vector<Command> commands{
        {"faces", "Face lattice with vertices, facets and active sets"},
        {"fan", "Normal fan cones"},
        {"stalks", "Local IC stalk polynomials m_sigma(t)"},
        {"ih", "Global IH class and Betti numbers (cone: punctured classes and summands)"},
        {"ehrhart", "Lattice-point counts and Ehrhart polynomial"},
        {"hypersurface", "Hodge numbers of the hypersurface with this Newton polytope"},
        {"prime-cut", "Prime cutting with the face map and multipliers"},
        {"blowup", "Blow-up of a cone at its apex"},
        {"check", "Run every applicable consistency identity"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("input", input, "vrep, hrep or support file")->required();
        if (std::string(c.name) == "prime-cut") sub->add_option("--epsilon", epsilon_text, "Starting epsilon (p/q)");
        if (std::string(c.name) == "hypersurface")
            sub->add_option("--components", components, "Components of the closed curve (n = 2)");
        if (std::string(c.name) == "blowup") {
            sub->add_option("--functional", functional_text, "Integer vector v, e.g. \"1,1,1\"")->required();
            sub->add_option("--level", level_text, "Cut level c > 0 (p/q)");
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    Report report;
    int status = 0;
    try {
        const ParsedInput in = parse_input(input);
        const Polytope p = to_polytope(in);
        const FaceLattice lattice(p);
        Report body;
        if (command == "faces") body = faces_report(p, lattice);
        else if (command == "fan") body = fan_report(p, lattice);
        else if (command == "stalks") body = stalks_report(lattice);
        else if (command == "ih") body = ih_report(lattice);
        else if (command == "ehrhart") body = ehrhart_report(p, lattice);
        else if (command == "hypersurface") body = hypersurface_report(p, lattice, components);
        else if (command == "prime-cut") body = prime_cut_report(p, lattice, parse_rat(epsilon_text));
        else if (command == "blowup")
            body = blowup_report(p, lattice, parse_functional(functional_text, p.ambient_dim()), parse_rat(level_text));
        else {
            body = check_report(in, p, lattice);
            if (!check_passed(body)) status = 2;
        }
        report["command"] = command;
        report["input"] = {{"file", input}, {"kind", kind_name(in.kind)}, {"ambient_dim", in.ambient_dim}};
        report[command == "check" ? "checks" : "report"] = body;
    } catch (const ParseError& e) {
        err << input << ":" << e.line() << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    }

    const std::string text = format == "json" ? report.dump(2) + "\n" : render_text(report);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot write '" << out_path << "'\n";
            return 1;
        }
        f << text;
    }
    return status;
}

}  // namespace toric
