#include "polyflow/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polyflow/asm.hpp"
#include "polyflow/kostant.hpp"
#include "polyflow/lattice.hpp"
#include "polyflow/triangulations.hpp"

namespace polyflow {

bool CheckResult::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

namespace {

std::string routes_text(const Clique& c) {
    std::ostringstream out;
    out << "{";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out << " ";
        out << "[";
        for (std::size_t i = 0; i < c[k].edges.size(); ++i) out << (i ? "," : "") << c[k].edges[i];
        out << "]";
    }
    out << "}";
    return out.str();
}

std::string point_text(const IntegerPoint& p) {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << p[k];
    out << ")";
    return out.str();
}

template <class Body>
CheckLine guarded(const std::string& name, Body&& body) {
    CheckLine line{name, true, ""};
    try {
        body(line);
    } catch (const std::exception& e) {
        line.ok = false;
        line.detail = std::string("exception: ") + e.what();
    }
    return line;
}

std::vector<Clique> leaf_cliques(const std::vector<PSLeaf>& leaves) {
    std::vector<Clique> out;
    for (const auto& l : leaves) out.push_back(l.routes);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<FramedGraph> framed_variants(const NamedGraph& g, bool exhaustive, int random_count) {
    std::vector<FramedGraph> out;
    if (exhaustive) {
        int k = 0;
        for (auto& f : all_framings(g.graph)) out.push_back({g.name + "/framing" + std::to_string(k++), g.graph, f});
        return out;
    }
    out.push_back({g.name + "/id-order", g.graph, Framing::id_order(g.graph)});
    for (int s = 1; s <= random_count; ++s) {
        out.push_back({g.name + "/seed" + std::to_string(s), g.graph, random_framing(g.graph, s)});
    }
    return out;
}

CheckResult verify_thm2(const std::vector<NamedPlanar>& fixtures) {
    CheckResult r;
    for (const auto& fx : fixtures) {
        r.lines.push_back(guarded(fx.name, [&](CheckLine& line) {
            const auto canonical = transported_canonical_triangulation(fx.data);
            const auto dkk = dkk_triangulation(fx.data.graph, fx.data.framing);
            const auto cmp = compare_triangulations(canonical, dkk);
            line.ok = cmp.equal;
            if (cmp.equal) {
                line.detail = std::to_string(dkk.size()) + " simplices";
            } else {
                const auto& s = cmp.only_in_first.empty() ? cmp.only_in_second.front() : cmp.only_in_first.front();
                line.detail = std::string(cmp.only_in_first.empty() ? "DKK-only" : "canonical-only") + " simplex with vertex " +
                              point_text(s.front());
            }
        }));
    }
    return r;
}

CheckResult verify_dkk_eq_ps(const std::vector<FramedGraph>& graphs) {
    CheckResult r;
    for (const auto& fg : graphs) {
        r.lines.push_back(guarded(fg.name, [&](CheckLine& line) {
            const auto leaves = ps_triangulation(fg.graph, fg.framing);
            const auto ps = leaf_cliques(leaves);
            const auto dkk = dkk_maximal_cliques(fg.graph, fg.framing);
            const Integer volume = flow_polytope_volume(fg.graph);
            for (const auto& c : ps) {
                for (std::size_t a = 0; a < c.size(); ++a) {
                    for (std::size_t b = a + 1; b < c.size(); ++b) {
                        if (!coherent(fg.graph, fg.framing, c[a], c[b])) {
                            line.ok = false;
                            line.detail = "incoherent PS leaf " + routes_text(c);
                            return;
                        }
                    }
                }
            }
            if (ps != dkk) {
                line.ok = false;
                std::vector<Clique> diff;
                std::set_symmetric_difference(ps.begin(), ps.end(), dkk.begin(), dkk.end(), std::back_inserter(diff));
                line.detail = "families differ, e.g. " + routes_text(diff.front());
                return;
            }
            if (Integer(static_cast<unsigned long>(ps.size())) != volume) {
                line.ok = false;
                line.detail = std::to_string(ps.size()) + " leaves but volume " + volume.get_str();
                return;
            }
            line.detail = std::to_string(ps.size()) + " cliques";
        }));
    }
    return r;
}

CheckResult verify_bij_linext(const std::vector<NamedPlanar>& fixtures) {
    CheckResult r;
    for (const auto& fx : fixtures) {
        r.lines.push_back(guarded(fx.name, [&](CheckLine& line) {
            const Poset p = dual_poset(fx.data).poset;
            const auto dkk = dkk_maximal_cliques(fx.data.graph, fx.data.framing);
            std::set<Clique> image;
            std::size_t count = 0;
            for (const auto& ext : linear_extensions(p)) {
                ++count;
                Clique c = linext_to_clique(fx.data, ext);
                std::sort(c.begin(), c.end());
                if (!image.insert(c).second) {
                    line.ok = false;
                    line.detail = "two extensions give " + routes_text(c);
                    return;
                }
            }
            const std::vector<Clique> img(image.begin(), image.end());
            if (img != dkk) {
                line.ok = false;
                line.detail = "image has " + std::to_string(img.size()) + " cliques, DKK has " + std::to_string(dkk.size());
                return;
            }
            line.detail = std::to_string(count) + " extensions";
        }));
    }
    return r;
}

CheckResult verify_bij_flow(const std::vector<FramedGraph>& graphs) {
    CheckResult r;
    for (const auto& fg : graphs) {
        r.lines.push_back(guarded(fg.name, [&](CheckLine& line) {
            const auto leaves = ps_triangulation(fg.graph, fg.framing);
            const auto flows = enumerate_integer_flows(fg.graph, NetflowVector::volume_shift(fg.graph));
            const auto dkk = dkk_maximal_cliques(fg.graph, fg.framing);
            std::set<Clique> image;
            for (const auto& flow : flows) {
                Clique c = flow_to_clique(fg.graph, fg.framing, flow);
                std::sort(c.begin(), c.end());
                if (clique_to_flow(leaves, c) != flow) {
                    line.ok = false;
                    line.detail = "clique_to_flow(flow_to_clique(x)) != x for " + routes_text(c);
                    return;
                }
                image.insert(c);
            }
            for (const auto& c : dkk) {
                Clique back = flow_to_clique(fg.graph, fg.framing, clique_to_flow(leaves, c));
                std::sort(back.begin(), back.end());
                if (back != c) {
                    line.ok = false;
                    line.detail = "flow_to_clique(clique_to_flow(c)) != c for " + routes_text(c);
                    return;
                }
            }
            if (image.size() != flows.size() || std::vector<Clique>(image.begin(), image.end()) != dkk) {
                line.ok = false;
                line.detail = std::to_string(flows.size()) + " flows, " + std::to_string(image.size()) + " distinct images, " +
                              std::to_string(dkk.size()) + " cliques";
                return;
            }
            line.detail = std::to_string(flows.size()) + " flows";
        }));
    }
    return r;
}

CheckResult verify_framing_change(const std::vector<FramedGraph>& graphs) {
    CheckResult r;
    for (std::size_t k = 0; k + 1 < graphs.size(); ++k) {
        const auto& a = graphs[k];
        const auto& b = graphs[k + 1];
        if (a.graph.edges().size() != b.graph.edges().size() || a.name.substr(0, a.name.find('/')) != b.name.substr(0, b.name.find('/'))) {
            continue;
        }
        r.lines.push_back(guarded(a.name + " -> " + b.name, [&](CheckLine& line) {
            const auto map = framing_change_bijection(a.graph, a.framing, b.framing);
            const auto from = dkk_maximal_cliques(a.graph, a.framing);
            const auto to = dkk_maximal_cliques(b.graph, b.framing);
            std::set<Clique> image;
            for (const auto& [src, dst] : map) image.insert(dst);
            std::vector<Clique> keys;
            for (const auto& [src, dst] : map) keys.push_back(src);
            line.ok = keys == from && std::vector<Clique>(image.begin(), image.end()) == to;
            line.detail = std::to_string(map.size()) + " cliques" + (line.ok ? "" : " (not a bijection)");
        }));
    }
    return r;
}

CheckResult verify_maps_roundtrip(const std::vector<NamedPlanar>& fixtures, const std::vector<int>& dilations) {
    CheckResult r;
    for (const auto& fx : fixtures) {
        for (int t : dilations) {
            r.lines.push_back(guarded(fx.name + "/t=" + std::to_string(t), [&](CheckLine& line) {
                const auto& g = fx.data.graph;
                const Poset p = dual_poset(fx.data).poset;
                const auto flows = enumerate_integer_flows(g, NetflowVector::unit(g.vertex_count(), t));
                const auto maps = order_preserving_maps(p, t);
                std::set<std::vector<int>> seen;
                for (const auto& flow : flows) {
                    std::vector<Rational> fl(flow.values.begin(), flow.values.end());
                    const auto f = flow_to_order_point(fx.data, fl, t, true);
                    std::vector<int> as_int;
                    for (const auto& v : f) {
                        if (v.get_den() != 1) throw InternalError("non-integral image of a lattice point");
                        as_int.push_back(static_cast<int>(v.get_num().get_si()));
                    }
                    if (order_to_flow_point(fx.data, f, t) != fl) {
                        line.ok = false;
                        line.detail = "o-f(f-o(x)) != x";
                        return;
                    }
                    seen.insert(as_int);
                }
                for (const auto& m : maps) {
                    std::vector<Rational> f(m.begin(), m.end());
                    const auto fl = order_to_flow_point(fx.data, f, t);
                    if (flow_to_order_point(fx.data, fl, t, true) != f) {
                        line.ok = false;
                        line.detail = "f-o(o-f(y)) != y";
                        return;
                    }
                }
                const std::vector<std::vector<int>> image(seen.begin(), seen.end());
                line.ok = image == maps && seen.size() == flows.size();
                line.detail = std::to_string(flows.size()) + " lattice points, " + std::to_string(maps.size()) + " maps";
            }));
        }
    }
    return r;
}

CheckResult verify_asm_family(int n) {
    CheckResult r;
    for (const auto& lambda : StaircaseShape::all(n)) {
        r.lines.push_back(guarded("n=" + std::to_string(n) + " lambda=" + lambda.to_string(), [&](CheckLine& line) {
            const FamilyReport rep = family_report(lambda);
            line.ok = rep.all_consistent;
            line.detail = std::to_string(rep.vertex_count) + " vertices, dim " + std::to_string(rep.dimension) + ", vol " +
                          rep.volume_by_extensions.get_str();
        }));
    }
    return r;
}

CheckResult verify_geometry(const std::vector<NamedPlanar>& planar, const std::vector<FramedGraph>& graphs) {
    CheckResult r;
    auto record = [&](const std::string& name, const std::vector<IntegerPoint>& vertices,
                      const std::vector<LatticeSimplex>& simplices, const Integer& volume) {
        r.lines.push_back(guarded(name, [&](CheckLine& line) {
            const auto rep = triangulation_checks(vertices, simplices, volume);
            line.ok = rep.ok;
            line.detail = std::to_string(rep.simplex_count) + " simplices, volume " + rep.volume_sum.get_str() + ", " +
                          std::to_string(rep.samples_checked) + " samples";
            if (!rep.ok && !rep.failures.empty()) line.detail += ": " + rep.failures.front();
        }));
    };
    for (const auto& fx : planar) {
        const Poset p = dual_poset(fx.data).poset;
        std::vector<LatticeSimplex> simplices;
        for (auto& c : canonical_triangulation(p)) simplices.push_back(std::move(c.simplex));
        record(fx.name + "/canonical", order_polytope_vertices(p), simplices, count_linear_extensions(p));
    }
    for (const auto& fg : graphs) {
        const auto vertices = flow_polytope_vertices(fg.graph);
        const Integer volume = flow_polytope_volume(fg.graph);
        record(fg.name + "/dkk", vertices, dkk_triangulation(fg.graph, fg.framing), volume);
        std::vector<LatticeSimplex> ps;
        for (const auto& leaf : ps_triangulation(fg.graph, fg.framing)) ps.push_back(clique_simplex(fg.graph, leaf.routes));
        record(fg.name + "/ps", vertices, ps, volume);
    }
    return r;
}

} // namespace polyflow
