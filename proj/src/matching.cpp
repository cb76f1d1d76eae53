#include <algorithm>
#include <functional>
#include <stdexcept>

#include "k33cut/tjoin.hpp"

// Primal-dual weighted matching with blossom shrinking, after the classic
// formulation by Galil; structure follows J. van Rantwijk's mwmatching.

namespace k33cut {

namespace {

class Matcher {
public:
    Matcher(int n, const std::vector<Edge>& edges, bool maxcard)
        : n_(n), edges_(edges), maxcard_(maxcard) {
        // doubled weights keep every dual update integral
        for (auto& e : edges_) e.w *= 2;
        const int m = static_cast<int>(edges_.size());
        Weight maxw = 0;
        for (const auto& e : edges_) maxw = std::max(maxw, e.w);
        endpoint_.resize(static_cast<std::size_t>(2 * m));
        neighbend_.assign(static_cast<std::size_t>(n), {});
        for (int k = 0; k < m; ++k) {
            endpoint_[static_cast<std::size_t>(2 * k)] = edges_[static_cast<std::size_t>(k)].u;
            endpoint_[static_cast<std::size_t>(2 * k + 1)] = edges_[static_cast<std::size_t>(k)].v;
            neighbend_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(k)].u)].push_back(2 * k + 1);
            neighbend_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(k)].v)].push_back(2 * k);
        }
        const auto nn = static_cast<std::size_t>(2 * n);
        mate_.assign(static_cast<std::size_t>(n), -1);
        label_.assign(nn, 0);
        labelend_.assign(nn, -1);
        inblossom_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) inblossom_[static_cast<std::size_t>(v)] = v;
        blossomparent_.assign(nn, -1);
        childs_.assign(nn, {});
        endps_.assign(nn, {});
        blossombase_.assign(nn, -1);
        for (int v = 0; v < n; ++v) blossombase_[static_cast<std::size_t>(v)] = v;
        bestedge_.assign(nn, -1);
        bestlist_.assign(nn, {});
        has_bestlist_.assign(nn, 0);
        for (int b = 2 * n - 1; b >= n; --b) unused_.push_back(b);
        dualvar_.assign(nn, 0);
        for (int v = 0; v < n; ++v) dualvar_[static_cast<std::size_t>(v)] = maxw;
        allowedge_.assign(static_cast<std::size_t>(m), 0);
    }

    std::vector<int> run();

private:
    int n_;
    std::vector<Edge> edges_;
    bool maxcard_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
    std::vector<std::vector<int>> childs_, endps_, bestlist_;
    std::vector<char> has_bestlist_, allowedge_;
    std::vector<int> unused_, queue_;
    std::vector<Weight> dualvar_;

    template <typename T>
    static T& at(std::vector<T>& v, int i) {
        return v[static_cast<std::size_t>(i)];
    }
    static int wrap(int j, std::size_t len) {
        const int l = static_cast<int>(len);
        return ((j % l) + l) % l;
    }

    Weight slack(int k) const {
        const auto& e = edges_[static_cast<std::size_t>(k)];
        return dualvar_[static_cast<std::size_t>(e.u)] + dualvar_[static_cast<std::size_t>(e.v)] - 2 * e.w;
    }

    void leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : childs_[static_cast<std::size_t>(b)]) leaves(t, out);
    }
    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        const int b = at(inblossom_, w);
        at(label_, w) = at(label_, b) = t;
        at(labelend_, w) = at(labelend_, b) = p;
        at(bestedge_, w) = at(bestedge_, b) = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            const int base = at(blossombase_, b);
            assign_label(at(endpoint_, at(mate_, base)), 1, at(mate_, base) ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = at(inblossom_, v);
            if (at(label_, b) & 4) {
                base = at(blossombase_, b);
                break;
            }
            path.push_back(b);
            at(label_, b) = 5;
            if (at(labelend_, b) == -1) {
                v = -1;
            } else {
                v = at(endpoint_, at(labelend_, b));
                b = at(inblossom_, v);
                v = at(endpoint_, at(labelend_, b));
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) at(label_, b) = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[static_cast<std::size_t>(k)].u;
        int w = edges_[static_cast<std::size_t>(k)].v;
        const int bb = at(inblossom_, base);
        int bv = at(inblossom_, v);
        int bw = at(inblossom_, w);
        const int b = unused_.back();
        unused_.pop_back();
        at(blossombase_, b) = base;
        at(blossomparent_, b) = -1;
        at(blossomparent_, bb) = b;
        std::vector<int> path, endps;
        while (bv != bb) {
            at(blossomparent_, bv) = b;
            path.push_back(bv);
            endps.push_back(at(labelend_, bv));
            v = at(endpoint_, at(labelend_, bv));
            bv = at(inblossom_, v);
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            at(blossomparent_, bw) = b;
            path.push_back(bw);
            endps.push_back(at(labelend_, bw) ^ 1);
            w = at(endpoint_, at(labelend_, bw));
            bw = at(inblossom_, w);
        }
        at(label_, b) = 1;
        at(labelend_, b) = at(labelend_, bb);
        at(dualvar_, b) = 0;
        at(childs_, b) = path;
        at(endps_, b) = endps;
        for (int x : leaves(b)) {
            if (at(label_, at(inblossom_, x)) == 2) queue_.push_back(x);
            at(inblossom_, x) = b;
        }
        std::vector<int> bestedgeto(static_cast<std::size_t>(2 * n_), -1);
        for (int sub : path) {
            std::vector<std::vector<int>> nblists;
            if (!at(has_bestlist_, sub)) {
                for (int x : leaves(sub)) {
                    std::vector<int> l;
                    for (int p : at(neighbend_, x)) l.push_back(p / 2);
                    nblists.push_back(std::move(l));
                }
            } else {
                nblists.push_back(at(bestlist_, sub));
            }
            for (const auto& nb : nblists)
                for (int kk : nb) {
                    int i = edges_[static_cast<std::size_t>(kk)].u;
                    int j = edges_[static_cast<std::size_t>(kk)].v;
                    if (at(inblossom_, j) == b) std::swap(i, j);
                    const int bj = at(inblossom_, j);
                    if (bj != b && at(label_, bj) == 1 &&
                        (at(bestedgeto, bj) == -1 || slack(kk) < slack(at(bestedgeto, bj))))
                        at(bestedgeto, bj) = kk;
                }
            at(bestlist_, sub).clear();
            at(has_bestlist_, sub) = 0;
            at(bestedge_, sub) = -1;
        }
        auto& bl = at(bestlist_, b);
        bl.clear();
        for (int kk : bestedgeto)
            if (kk != -1) bl.push_back(kk);
        at(has_bestlist_, b) = 1;
        at(bestedge_, b) = -1;
        for (int kk : bl)
            if (at(bestedge_, b) == -1 || slack(kk) < slack(at(bestedge_, b))) at(bestedge_, b) = kk;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : std::vector<int>(at(childs_, b))) {
            at(blossomparent_, s) = -1;
            if (s < n_) {
                at(inblossom_, s) = s;
            } else if (endstage && at(dualvar_, s) == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int v : leaves(s)) at(inblossom_, v) = s;
            }
        }
        if (!endstage && at(label_, b) == 2) {
            const auto& ch = at(childs_, b);
            const auto& ep = at(endps_, b);
            const int entrychild = at(inblossom_, at(endpoint_, at(labelend_, b) ^ 1));
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep, endptrick;
            if (j & 1) {
                j -= static_cast<int>(ch.size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = at(labelend_, b);
            while (j != 0) {
                at(label_, at(endpoint_, p ^ 1)) = 0;
                at(label_, at(endpoint_, ep[static_cast<std::size_t>(wrap(j - endptrick, ep.size()))] ^ endptrick ^ 1)) = 0;
                assign_label(at(endpoint_, p ^ 1), 2, p);
                at(allowedge_, ep[static_cast<std::size_t>(wrap(j - endptrick, ep.size()))] / 2) = 1;
                j += jstep;
                p = ep[static_cast<std::size_t>(wrap(j - endptrick, ep.size()))] ^ endptrick;
                at(allowedge_, p / 2) = 1;
                j += jstep;
            }
            int bv = ch[static_cast<std::size_t>(wrap(j, ch.size()))];
            at(label_, at(endpoint_, p ^ 1)) = at(label_, bv) = 2;
            at(labelend_, at(endpoint_, p ^ 1)) = at(labelend_, bv) = p;
            at(bestedge_, bv) = -1;
            j += jstep;
            while (ch[static_cast<std::size_t>(wrap(j, ch.size()))] != entrychild) {
                bv = ch[static_cast<std::size_t>(wrap(j, ch.size()))];
                if (at(label_, bv) == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int v : leaves(bv))
                    if (at(label_, v) != 0) {
                        found = v;
                        break;
                    }
                if (found != -1) {
                    at(label_, found) = 0;
                    at(label_, at(endpoint_, at(mate_, at(blossombase_, bv)))) = 0;
                    assign_label(found, 2, at(labelend_, found));
                }
                j += jstep;
            }
        }
        at(label_, b) = at(labelend_, b) = -1;
        at(childs_, b).clear();
        at(endps_, b).clear();
        at(blossombase_, b) = -1;
        at(bestlist_, b).clear();
        at(has_bestlist_, b) = 0;
        at(bestedge_, b) = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (at(blossomparent_, t) != b) t = at(blossomparent_, t);
        if (t >= n_) augment_blossom(t, v);
        auto& ch = at(childs_, b);
        auto& ep = at(endps_, b);
        const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= static_cast<int>(ch.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[static_cast<std::size_t>(wrap(j, ch.size()))];
            const int p = ep[static_cast<std::size_t>(wrap(j - endptrick, ep.size()))] ^ endptrick;
            if (t >= n_) augment_blossom(t, at(endpoint_, p));
            j += jstep;
            t = ch[static_cast<std::size_t>(wrap(j, ch.size()))];
            if (t >= n_) augment_blossom(t, at(endpoint_, p ^ 1));
            at(mate_, at(endpoint_, p)) = p ^ 1;
            at(mate_, at(endpoint_, p ^ 1)) = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        at(blossombase_, b) = at(blossombase_, ch.front());
    }

    void augment_matching(int k) {
        const int v = edges_[static_cast<std::size_t>(k)].u;
        const int w = edges_[static_cast<std::size_t>(k)].v;
        for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            while (true) {
                const int bs = at(inblossom_, s);
                if (bs >= n_) augment_blossom(bs, s);
                at(mate_, s) = p;
                if (at(labelend_, bs) == -1) break;
                const int t = at(endpoint_, at(labelend_, bs));
                const int bt = at(inblossom_, t);
                s = at(endpoint_, at(labelend_, bt));
                const int j = at(endpoint_, at(labelend_, bt) ^ 1);
                if (bt >= n_) augment_blossom(bt, j);
                at(mate_, j) = at(labelend_, bt);
                p = at(labelend_, bt) ^ 1;
            }
        }
    }
};

std::vector<int> Matcher::run() {
    const int n = n_;
    for (int stage = 0; stage < n; ++stage) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(bestedge_.begin(), bestedge_.end(), -1);
        for (int b = n; b < 2 * n; ++b) {
            at(bestlist_, b).clear();
            at(has_bestlist_, b) = 0;
        }
        std::fill(allowedge_.begin(), allowedge_.end(), 0);
        queue_.clear();
        for (int v = 0; v < n; ++v)
            if (at(mate_, v) == -1 && at(label_, at(inblossom_, v)) == 0) assign_label(v, 1, -1);
        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                const int v = queue_.back();
                queue_.pop_back();
                for (int p : std::vector<int>(at(neighbend_, v))) {
                    const int k = p / 2;
                    const int w = at(endpoint_, p);
                    if (at(inblossom_, v) == at(inblossom_, w)) continue;
                    Weight kslack = 0;
                    if (!at(allowedge_, k)) {
                        kslack = slack(k);
                        if (kslack <= 0) at(allowedge_, k) = 1;
                    }
                    if (at(allowedge_, k)) {
                        if (at(label_, at(inblossom_, w)) == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (at(label_, at(inblossom_, w)) == 1) {
                            const int base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (at(label_, w) == 0) {
                            at(label_, w) = 2;
                            at(labelend_, w) = p ^ 1;
                        }
                    } else if (at(label_, at(inblossom_, w)) == 1) {
                        const int b = at(inblossom_, v);
                        if (at(bestedge_, b) == -1 || kslack < slack(at(bestedge_, b))) at(bestedge_, b) = k;
                    } else if (at(label_, w) == 0) {
                        if (at(bestedge_, w) == -1 || kslack < slack(at(bestedge_, w))) at(bestedge_, w) = k;
                    }
                }
            }
            if (augmented) break;

            int deltatype = -1;
            Weight delta = 0;
            int deltaedge = -1, deltablossom = -1;
            if (!maxcard_) {
                deltatype = 1;
                delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n);
            }
            for (int v = 0; v < n; ++v)
                if (at(label_, at(inblossom_, v)) == 0 && at(bestedge_, v) != -1) {
                    const Weight d = slack(at(bestedge_, v));
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = at(bestedge_, v);
                    }
                }
            for (int b = 0; b < 2 * n; ++b)
                if (at(blossomparent_, b) == -1 && at(label_, b) == 1 && at(bestedge_, b) != -1) {
                    const Weight d = slack(at(bestedge_, b)) / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = at(bestedge_, b);
                    }
                }
            for (int b = n; b < 2 * n; ++b)
                if (at(blossombase_, b) >= 0 && at(blossomparent_, b) == -1 && at(label_, b) == 2 &&
                    (deltatype == -1 || at(dualvar_, b) < delta)) {
                    delta = at(dualvar_, b);
                    deltatype = 4;
                    deltablossom = b;
                }
            if (deltatype == -1) {
                deltatype = 1;
                delta = std::max<Weight>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n));
            }
            for (int v = 0; v < n; ++v) {
                const int l = at(label_, at(inblossom_, v));
                if (l == 1) at(dualvar_, v) -= delta;
                else if (l == 2) at(dualvar_, v) += delta;
            }
            for (int b = n; b < 2 * n; ++b)
                if (at(blossombase_, b) >= 0 && at(blossomparent_, b) == -1) {
                    if (at(label_, b) == 1) at(dualvar_, b) += delta;
                    else if (at(label_, b) == 2) at(dualvar_, b) -= delta;
                }
            if (deltatype == 1) break;
            if (deltatype == 2) {
                at(allowedge_, deltaedge) = 1;
                int i = edges_[static_cast<std::size_t>(deltaedge)].u;
                int j = edges_[static_cast<std::size_t>(deltaedge)].v;
                if (at(label_, at(inblossom_, i)) == 0) std::swap(i, j);
                queue_.push_back(i);
            } else if (deltatype == 3) {
                at(allowedge_, deltaedge) = 1;
                queue_.push_back(edges_[static_cast<std::size_t>(deltaedge)].u);
            } else {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented) break;
        for (int b = n; b < 2 * n; ++b)
            if (at(blossomparent_, b) == -1 && at(blossombase_, b) >= 0 && at(label_, b) == 1 && at(dualvar_, b) == 0)
                expand_blossom(b, true);
    }
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (at(mate_, v) >= 0) out[static_cast<std::size_t>(v)] = at(endpoint_, at(mate_, v));
    return out;
}

}  // namespace

std::vector<int> max_weight_matching(int n, const std::vector<Edge>& edges, bool max_cardinality) {
    if (n == 0 || edges.empty()) return std::vector<int>(static_cast<std::size_t>(n), -1);
    Matcher m(n, edges, max_cardinality);
    return m.run();
}

MatchingInstance::MatchingInstance(int points) : n_(points) {
    if (points < 0) throw std::invalid_argument("negative point count");
    w_.assign(static_cast<std::size_t>(points) * static_cast<std::size_t>(points), 0);
}

void MatchingInstance::set(int i, int j, Weight w) {
    if (i == j) throw std::invalid_argument("matching weight on a diagonal entry");
    w_[static_cast<std::size_t>(i * n_ + j)] = w;
    w_[static_cast<std::size_t>(j * n_ + i)] = w;
}

MatchingResult min_weight_perfect_matching(const MatchingInstance& inst) {
    const int n = inst.size();
    if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even number of points");
    MatchingResult res;
    if (n == 0) return res;
    Weight maxw = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) maxw = std::max(maxw, inst.weight(i, j) < 0 ? -inst.weight(i, j) : inst.weight(i, j));
    // maximize sum of (K - w) over perfect matchings
    const Weight k = 2 * maxw + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, k - inst.weight(i, j)});
    const auto mate = max_weight_matching(n, edges, true);
    for (int i = 0; i < n; ++i) {
        const int j = mate[static_cast<std::size_t>(i)];
        if (j < 0) throw std::logic_error("matching is not perfect");
        if (i < j) {
            res.pairs.emplace_back(i, j);
            res.total += inst.weight(i, j);
        }
    }
    return res;
}

}  // namespace k33cut
