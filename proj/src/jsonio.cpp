#include "ppbox/jsonio.hpp"

#include <sstream>

namespace ppbox {

using nlohmann::json;

nlohmann::json graph_to_json(const WeightedGraph& g) {
    json j;
    j["class"] = class_name(g.cls);
    j["box"] = {g.box.a, g.box.b, g.box.c};
    auto vertex_array = [&](const std::vector<GraphVertex>& vs, bool up) {
        json arr = json::array();
        for (const auto& v : vs) {
            json jv;
            jv["ranks"] = v.r;
            jv["x"] = v.r[0];
            jv["y"] = v.r[1];
            jv["up"] = up;
            arr.push_back(jv);
        }
        return arr;
    };
    j["ups"] = vertex_array(g.ups, true);
    j["downs"] = vertex_array(g.downs, false);
    json edges = json::array();
    for (const auto& e : g.edges) {
        json je;
        je["up"] = e.up_v;
        je["down"] = e.down_v;
        je["dir"] = e.dir;
        je["weight"] = e.weight.str();
        edges.push_back(je);
    }
    j["edges"] = edges;
    json faces = json::array();
    for (const auto& f : g.faces) {
        json jf;
        jf["edges"] = f.edge_ids;
        jf["two_gon"] = f.two_gon;
        faces.push_back(jf);
    }
    j["faces"] = faces;
    return j;
}

namespace {

template <class R>
std::string entry_str(const R& v) {
    return RingOps<R>::str(v);
}

}  // namespace

template <class R>
nlohmann::json block_to_json(const SlicedBlock<R>& blk) {
    json j;
    j["factors"] = blk.highest;
    json cols = json::array(), rows = json::array();
    for (int i = 0; i < blk.cols(); ++i) cols.push_back(blk.col_weights(i));
    for (int i = 0; i < blk.rows(); ++i) rows.push_back(blk.row_weights(i));
    j["col_weights"] = cols;
    j["row_weights"] = rows;
    json entries = json::array();
    for (int i = 0; i < blk.rows(); ++i)
        for (int j2 = 0; j2 < blk.cols(); ++j2)
            if (!RingOps<R>::is_zero(blk.a[i][j2]))
                entries.push_back({{"row", i}, {"col", j2}, {"value", entry_str(blk.a[i][j2])}});
    j["entries"] = entries;
    return j;
}

template nlohmann::json block_to_json<BigInt>(const SlicedBlock<BigInt>&);
template nlohmann::json block_to_json<Laurent>(const SlicedBlock<Laurent>&);

template <class R>
std::string block_to_csv(const SlicedBlock<R>& blk) {
    std::ostringstream os;
    auto label = [](const std::vector<int>& w) {
        std::string s = "(";
        for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
        return s + ")";
    };
    os << "row\\col";
    for (int j = 0; j < blk.cols(); ++j) os << "," << label(blk.col_weights(j));
    os << "\n";
    for (int i = 0; i < blk.rows(); ++i) {
        os << label(blk.row_weights(i));
        for (int j = 0; j < blk.cols(); ++j) os << "," << entry_str(blk.a[i][j]);
        os << "\n";
    }
    return os.str();
}

template std::string block_to_csv<BigInt>(const SlicedBlock<BigInt>&);
template std::string block_to_csv<Laurent>(const SlicedBlock<Laurent>&);

nlohmann::json flatness_to_json(const FlatnessReport& rep) {
    json faces = json::array();
    for (const auto& f : rep.faces)
        faces.push_back(
            {{"face", f.face}, {"two_gon", f.two_gon}, {"curvature", f.curvature}, {"ok", f.ok}});
    return json{{"all_ok", rep.all_ok}, {"faces", faces}};
}

nlohmann::json terms_to_json(const TermReport& rep) {
    json terms = json::array();
    for (const auto& t : rep.terms) terms.push_back(t.str());
    return json{{"matchings", rep.matchings},
                {"all_equal", rep.all_equal},
                {"common", rep.common.str()},
                {"terms", terms}};
}

nlohmann::json routes_to_json(const std::vector<CountResult>& results) {
    json arr = json::array();
    bool agree = true;
    for (const auto& r : results) {
        arr.push_back({{"class", class_name(r.cls)},
                       {"box", {r.dims.a, r.dims.b, r.dims.c}},
                       {"route", r.route},
                       {"value", r.value_str()}});
        if (r.value_str() != results.front().value_str()) agree = false;
    }
    return json{{"agree", agree}, {"results", arr}};
}

}  // namespace ppbox
