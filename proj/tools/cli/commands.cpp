#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinaltri/acceptance.hpp"
#include "spinaltri/birkhoff.hpp"
#include "spinaltri/errors.hpp"
#include "spinaltri/everest.hpp"
#include "spinaltri/io.hpp"
#include "spinaltri/volume.hpp"

namespace spinaltri::cli {

namespace {

using nlohmann::json;

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const QVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json to_json(const std::vector<QVector>& pts) {
    json a = json::array();
    for (const auto& v : pts) a.push_back(to_json(v));
    return a;
}

json to_json(const QMatrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

json to_json(const std::vector<NamedCheck>& checks) {
    json a = json::array();
    for (const auto& c : checks) a.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return a;
}

json triangulation_json(const Triangulation& t) { return {{"dim", t.dim()}, {"simplices", t.simplices()}}; }

// Human rendering of a result document: scalars bare, objects as aligned
// key/value tables, arrays of rows as aligned grids.
std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_flat(const json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& x : j)
        if (x.is_array() || x.is_object()) return false;
    return true;
}

std::string flat_text(const json& j) {
    if (!j.is_array()) return scalar_text(j);
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
}

void render(const json& j, std::ostream& out, int indent);

void render_grid(const std::vector<std::vector<std::string>>& rows, std::ostream& out, int indent) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], r[c].size());
        }
    for (const auto& r : rows) {
        out << std::string(static_cast<std::size_t>(indent), ' ');
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c + 1 < r.size()) out << std::left << std::setw(static_cast<int>(width[c] + 2));
            out << r[c];
        }
        out << '\n';
    }
}

void render(const json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::pair<std::string, const json*>> nested;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (is_flat(it.value())) rows.push_back({it.key(), flat_text(it.value())});
            else nested.emplace_back(it.key(), &it.value());
        }
        render_grid(rows, out, indent);
        for (const auto& [key, value] : nested) {
            out << pad << key << ":\n";
            render(*value, out, indent + 2);
        }
        return;
    }
    if (j.is_array()) {
        bool rows_of_scalars = true, objects = !j.empty();
        for (const auto& x : j) {
            rows_of_scalars = rows_of_scalars && is_flat(x);
            objects = objects && x.is_object();
        }
        if (objects) {
            std::vector<std::string> header;
            for (auto it = j[0].begin(); it != j[0].end(); ++it) header.push_back(it.key());
            bool uniform = true;
            for (const auto& x : j) {
                for (const auto& k : header) uniform = uniform && x.contains(k) && is_flat(x[k]);
                uniform = uniform && x.size() == header.size();
            }
            if (uniform) {
                std::vector<std::vector<std::string>> rows{header};
                for (const auto& x : j) {
                    std::vector<std::string> r;
                    for (const auto& k : header) r.push_back(flat_text(x[k]));
                    rows.push_back(std::move(r));
                }
                render_grid(rows, out, indent);
                return;
            }
        }
        if (rows_of_scalars) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& x : j) {
                std::vector<std::string> r;
                if (x.is_array())
                    for (const auto& y : x) r.push_back(scalar_text(y));
                else
                    r.push_back(scalar_text(x));
                rows.push_back(std::move(r));
            }
            render_grid(rows, out, indent);
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << pad << "[" << i << "]\n";
            render(j[i], out, indent + 2);
        }
        return;
    }
    out << pad << scalar_text(j) << '\n';
}

// Matrix with '|' between column blocks and a rule between row blocks.
std::string block_text(const QMatrix& m, std::size_t row_block, std::size_t col_block) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::size_t w = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells[r].push_back(m(r, c).to_string());
            w = std::max(w, cells[r].back().size());
        }
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0 && row_block && r % row_block == 0) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c > 0 && col_block && c % col_block == 0) os << "-+";
                os << std::string(w + 1, '-');
            }
            os << '\n';
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0 && col_block && c % col_block == 0) os << " |";
            os << ' ' << std::setw(static_cast<int>(w)) << cells[r][c];
        }
        os << '\n';
    }
    return os.str();
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool pretty = false;

    void emit(const json& j) const {
        if (pretty) render(j, out, 0);
        else out << j.dump() << '\n';
    }
};

Spine spine_of(const Polytope& p, const std::vector<std::size_t>& set) { return Spine::make(p, set); }

VolumeMethod parse_method(const std::string& m) {
    if (m == "formula") return VolumeMethod::Formula;
    if (m == "hull") return VolumeMethod::Hull;
    return VolumeMethod::Lifting;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spinal triangulations, folds, lifts and volumes of convex polytopes", "spinaltri"};
    app.require_subcommand(1);
    Context ctx{out, err};
    app.add_flag("--pretty", ctx.pretty, "Aligned tables instead of JSON");
    std::size_t max_dim = 0;
    app.add_option("--max-dim", max_dim, "Raise the desk-scale guards (same as SPINALTRI_MAX_DIM)")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;
    std::string path, tri_path, star_path, method = "formula", family = "everest";
    std::vector<std::size_t> set, order;
    std::size_t min_size = 2, n = 0, s = 0, criterion = 0;
    bool spinal = false, validate_flag = false, geometric = false, volume_flag = false, long_flag = false;

    auto polytope_arg = [&](CLI::App* cmd) {
        cmd->add_option("polytope", path, "Polytope JSON document")->required()->check(CLI::ExistingFile);
    };
    auto set_arg = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--set", set, "Spine vertex indices, e.g. 0,7")->delimiter(',');
        if (required) o->required();
    };
    auto order_arg = [&](CLI::App* cmd) {
        cmd->add_option("--order", order, "Pulling order as a permutation of vertex indices")->delimiter(',');
    };

    auto* facets_cmd = app.add_subcommand("facets", "List facets as primitive outward normals");
    polytope_arg(facets_cmd);
    facets_cmd->callback([&] {
        action = [&] {
            const Polytope p = load_polytope(path);
            json a = json::array();
            for (const auto& f : p.facets())
                a.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}, {"vertices", f.incident}});
            ctx.emit(a);
            return 0;
        };
    });

    auto* check_cmd = app.add_subcommand("spine-check", "Test whether a vertex set is a spine");
    polytope_arg(check_cmd);
    set_arg(check_cmd, true);
    check_cmd->add_flag("--geometric", geometric, "Also run the covering criterion");
    check_cmd->callback([&] {
        action = [&] {
            const Polytope p = load_polytope(path);
            const bool facet = is_spine(p, set);
            if (!geometric) {
                ctx.emit(facet);
                return 0;
            }
            const bool cover = is_spine_geometric(p, set);
            ctx.emit({{"facet_criterion", facet}, {"covering_criterion", cover}});
            return facet == cover ? 0 : 1;
        };
    });

    auto* enum_cmd = app.add_subcommand("spine-enum", "Enumerate all spines");
    polytope_arg(enum_cmd);
    enum_cmd->add_option("--min-size", min_size, "Smallest spine size to report")->capture_default_str();
    enum_cmd->callback([&] {
        action = [&] {
            ctx.emit(enumerate_spines(load_polytope(path), min_size));
            return 0;
        };
    });

    auto* tri_cmd = app.add_subcommand("triangulate", "Pulling or spinal triangulation");
    polytope_arg(tri_cmd);
    order_arg(tri_cmd);
    set_arg(tri_cmd, false);
    tri_cmd->add_flag("--spinal", spinal, "Pull the spine given by --set first");
    tri_cmd->add_flag("--validate", validate_flag, "Validate exactly; exit 1 if invalid");
    tri_cmd->callback([&] {
        action = [&] {
            const Polytope p = load_polytope(path);
            if (spinal && set.empty()) throw CLI::ValidationError("--spinal", "requires --set");
            if (spinal && !order.empty()) throw CLI::ValidationError("--spinal", "cannot be combined with --order");
            const Triangulation t = spinal ? spinal_triangulation(spine_of(p, set))
                                   : order.empty() ? pulling_triangulation(p)
                                                   : pulling_triangulation(p, order);
            if (validate_flag) {
                const auto v = validate(t, p);
                if (!v) {
                    ctx.err << "error: invalid triangulation: " << v.diagnostic << '\n';
                    return 1;
                }
            }
            ctx.emit(triangulation_json(t));
            return 0;
        };
    });

    auto* fold_cmd = app.add_subcommand("fold", "Fold a spinal triangulation into the shadow");
    polytope_arg(fold_cmd);
    set_arg(fold_cmd, true);
    fold_cmd->add_option("--triangulation", tri_path, "Triangulation document (default: the spinal pulling one)")
        ->check(CLI::ExistingFile);
    fold_cmd->callback([&] {
        action = [&] {
            const Polytope p = load_polytope(path);
            const Spine sp = spine_of(p, set);
            const ShadowMap sm = shadow(sp);
            const Triangulation t = tri_path.empty()
                                        ? spinal_triangulation(sp)
                                        : load_triangulation(tri_path, std::make_shared<const std::vector<QVector>>(p.vertices()));
            const Triangulation f = fold(t, sm);
            json lift_table = json::array();
            for (std::size_t k = 1; k < sm.lift_table.size(); ++k) lift_table.push_back(sm.lift_table[k]);
            ctx.emit({{"e", sm.e},
                      {"shadow_points", to_json(*sm.table)},
                      {"preimages", lift_table},
                      {"dim", f.dim()},
                      {"simplices", f.simplices()}});
            return 0;
        };
    });

    auto* lift_cmd = app.add_subcommand("lift", "Lift a star triangulation of the shadow");
    polytope_arg(lift_cmd);
    set_arg(lift_cmd, true);
    order_arg(lift_cmd);
    lift_cmd->add_option("--star", star_path,
                         "Star triangulation over the shadow points listed by 'fold' (default: built from --order)")
        ->check(CLI::ExistingFile);
    lift_cmd->callback([&] {
        action = [&] {
            const Polytope p = load_polytope(path);
            const ShadowMap sm = shadow(spine_of(p, set));
            const Triangulation star = star_path.empty() ? star_triangulation(*sm.table, order).triangulation
                                                         : load_triangulation(star_path, sm.table);
            ctx.emit(triangulation_json(lift(star, sm)));
            return 0;
        };
    });

    auto* vol_cmd = app.add_subcommand("volume", "Exact volume by pulling triangulation");
    polytope_arg(vol_cmd);
    order_arg(vol_cmd);
    vol_cmd->callback([&] {
        action = [&] {
            const Polytope p = load_polytope(path);
            const VolumeReport r = order.empty() ? polytope_volume(p) : polytope_volume(p, order);
            if (ctx.pretty) {
                json j{{"dim", r.dim}, {"simplices", r.n_simplices}, {"sq_volume", r.sq_volume.to_string()}};
                if (r.volume) j["volume"] = r.volume->to_string();
                ctx.emit(j);
            } else {
                ctx.emit(r.volume ? r.volume->to_string() : r.sq_volume.to_string() + " (squared)");
            }
            return 0;
        };
    });

    auto* lifting_cmd = app.add_subcommand("verify-lifting", "Check C(d,n-1)^2 vol(P)^2 = vol(U)^2 vol(shadow)^2");
    polytope_arg(lifting_cmd);
    set_arg(lifting_cmd, true);
    lifting_cmd->callback([&] {
        action = [&] {
            const LiftingReport r = verify_lifting_relation(spine_of(load_polytope(path), set));
            ctx.emit({{"d", r.d},
                      {"n", r.n},
                      {"e", r.e},
                      {"binomial", to_json(r.binom)},
                      {"vol_p_sq", to_json(r.vol_p_sq)},
                      {"vol_u_sq", to_json(r.vol_u_sq)},
                      {"vol_shadow_sq", to_json(r.vol_shadow_sq)},
                      {"shadow_vertices", r.shadow_vertices},
                      {"lhs", to_json(r.binom * r.binom * r.vol_p_sq)},
                      {"rhs", to_json(r.vol_u_sq * r.vol_shadow_sq)},
                      {"relation_holds", r.relation_holds},
                      {"simplices_hold", r.simplices_hold}});
            return r ? 0 : 1;
        };
    });

    auto* everest_cmd = app.add_subcommand("everest", "Everest polytope E(n,s)");
    everest_cmd->require_subcommand(1);
    auto ns_args = [&](CLI::App* cmd) {
        cmd->add_option("n", n, "n >= 1")->required()->check(CLI::PositiveNumber);
        cmd->add_option("s", s, "s >= 1")->required()->check(CLI::PositiveNumber);
    };
    auto* ev_vertices = everest_cmd->add_subcommand("vertices", "Vertex families");
    ns_args(ev_vertices);
    ev_vertices->add_option("--family", family, "everest, minus-one, zero or one")
        ->check(CLI::IsMember({"everest", "minus-one", "zero", "one"}))
        ->capture_default_str();
    ev_vertices->callback([&] {
        action = [&] {
            const auto f = vertex_families(EverestParams::make(n, s));
            const VertexFamily& fam = family == "minus-one" ? f.minus_one
                                      : family == "zero"    ? f.zero
                                      : family == "one"     ? f.one
                                                            : f.everest;
            ctx.emit({{"family", to_string(fam.kind)}, {"count", fam.points.size()}, {"vertices", to_json(fam.points)}});
            return 0;
        };
    });
    auto* ev_volume = everest_cmd->add_subcommand("volume", "Volume of E(n,s)");
    ns_args(ev_volume);
    ev_volume->add_option("--method", method, "formula, hull or lifting")
        ->check(CLI::IsMember({"formula", "hull", "lifting"}))
        ->capture_default_str();
    ev_volume->callback([&] {
        action = [&] {
            ctx.emit(everest_volume(EverestParams::make(n, s), parse_method(method)).to_string());
            return 0;
        };
    });
    auto* ev_verify = everest_cmd->add_subcommand("verify", "Run every Everest identity");
    ns_args(ev_verify);
    ev_verify->callback([&] {
        action = [&] {
            const auto checks = verify_everest(EverestParams::make(n, s));
            ctx.emit(to_json(checks));
            for (const auto& c : checks)
                if (!c.passed) return 1;
            return 0;
        };
    });

    auto* birkhoff_cmd = app.add_subcommand("birkhoff", "Birkhoff polytope projection");
    birkhoff_cmd->require_subcommand(1);
    auto n_arg = [&](CLI::App* cmd) { cmd->add_option("n", n, "Order, 2 <= n <= 5")->required(); };
    auto* bk_context = birkhoff_cmd->add_subcommand("context", "Vertices, spine and matrices");
    n_arg(bk_context);
    bk_context->callback([&] {
        action = [&] {
            const BirkhoffContext c = birkhoff_context(n);
            if (ctx.pretty) {
                out << "n = " << c.n << ", m = " << c.m << ", " << c.vertices.size() << " vertices, spine "
                    << flat_text(json(c.spine)) << "\n\nA_n\n"
                    << block_text(c.a_mat, 0, c.n) << "\nB_n\n"
                    << block_text(c.b_mat, c.n, c.m) << "\nC_n\n"
                    << block_text(c.c_mat, 0, 0) << "\nD_n\n"
                    << block_text(c.d_mat, 0, c.m) << "\na_n\n"
                    << block_text(QMatrix::from_rows({c.a_vec}), 0, c.n) << "\nb_n\n"
                    << block_text(QMatrix::from_rows({c.b_vec}), 0, 0) << "\nJ_n\n"
                    << block_text(c.j_mat, 0, 0);
                return 0;
            }
            ctx.emit({{"n", c.n},
                      {"m", c.m},
                      {"vertices", to_json(c.vertices)},
                      {"spine", c.spine},
                      {"A", to_json(c.a_mat)},
                      {"B", to_json(c.b_mat)},
                      {"C", to_json(c.c_mat)},
                      {"D", to_json(c.d_mat)},
                      {"a", to_json(c.a_vec)},
                      {"b", to_json(c.b_vec)},
                      {"J", to_json(c.j_mat)}});
            return 0;
        };
    });
    auto* bk_project = birkhoff_cmd->add_subcommand("project", "Vertices of the projected polytope");
    n_arg(bk_project);
    bk_project->callback([&] {
        action = [&] {
            const Polytope hat = projected_birkhoff(birkhoff_context(n));
            ctx.emit({{"ambient_dim", hat.ambient_dim()}, {"vertices", to_json(hat.vertices())}});
            return 0;
        };
    });
    auto* bk_verify = birkhoff_cmd->add_subcommand("verify", "Determinant identities and the volume relation");
    n_arg(bk_verify);
    bk_verify->add_flag("--volume", volume_flag, "Also check the volume relation (n = 3; n = 4 needs --long)");
    bk_verify->add_flag("--long", long_flag, "Allow the minutes-scale n = 4 volume relation");
    bk_verify->callback([&] {
        action = [&] {
            const BirkhoffContext c = birkhoff_context(n);
            auto checks = determinant_identities(c);
            if (volume_flag) {
                const auto r = verify_birkhoff_volume_relation(c, long_flag);
                checks.push_back({"C(m^2,m) vol(B_n) = vol(hat B_n) n^m / m!", r.relation_holds,
                                  r.lhs.to_string() + " vs " + r.rhs.to_string()});
                checks.push_back({"vol(B_n) = n^m vol(A_n B_n) matches the direct volume", r.gram_agrees,
                                  "vol(B_n) = " + r.vol_b.to_string()});
                checks.push_back({"lifting relation on C A B + b", r.lifting_agrees, {}});
                checks.push_back({"origin interior to hat B_n", r.origin_interior, {}});
            }
            ctx.emit(to_json(checks));
            for (const auto& ch : checks)
                if (!ch.passed) return 1;
            return 0;
        };
    });

    auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    self_cmd->add_option("--criterion", criterion, "Run only this criterion (1-10)")
        ->check(CLI::Range(1, acceptance::kCriteria));
    self_cmd->callback([&] {
        action = [&] {
            int failed = 0;
            json rows = json::array();
            for (int id = 1; id <= acceptance::kCriteria; ++id) {
                if (criterion && static_cast<int>(criterion) != id) continue;
                const auto o = acceptance::run_criterion(id);
                failed += !o.passed;
                if (ctx.pretty) out << acceptance::format(o) << std::endl;
                else rows.push_back({{"id", o.id}, {"title", o.title}, {"passed", o.passed}, {"detail", o.detail}});
            }
            if (!ctx.pretty) ctx.emit(rows);
            return failed ? 1 : 0;
        };
    });

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* subsub : sub->get_subcommands({})) subsub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (max_dim) setenv("SPINALTRI_MAX_DIM", std::to_string(max_dim).c_str(), 1);

    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace spinaltri::cli
