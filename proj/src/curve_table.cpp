#include "curve_table.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "curves_data.hpp"

namespace isogrowth {

namespace {

using nlohmann::json;

struct Edge {
    std::string a, b;
    Z degree;
};

struct Table {
    std::vector<CurveRecord> records;
    std::vector<Edge> edges;
    std::string raw;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

const Table& table() {
    static const Table t = [] {
        Table out;
        out.raw = kCurvesJson;
        json j = json::parse(out.raw);
        for (auto& c : j.at("curves")) {
            CurveRecord r;
            r.label = c.at("label").get<std::string>();
            r.isogeny_class = c.at("class").get<std::string>();
            auto co = c.at("coefficients");
            for (int i = 0; i < 5; i++)
                r.coefficients[i] = co.at(i).get<std::string>();
            out.records.push_back(r);
        }
        for (auto& e : j.at("isogenies"))
            out.edges.push_back({e.at("source").get<std::string>(),
                                 e.at("target").get<std::string>(),
                                 Z(e.at("degree").get<long>())});
        return out;
    }();
    return t;
}

const CurveRecord* find(const std::string& label) {
    std::string key = lower(label);
    for (const CurveRecord& r : table().records)
        if (r.label == key)
            return &r;
    return nullptr;
}

}  // namespace

const std::vector<CurveRecord>& curve_table() { return table().records; }

const std::string& curve_table_json() { return table().raw; }

bool has_curve(const std::string& label) { return find(label) != nullptr; }

WeierstrassModel curve_by_label(const std::string& label) {
    const CurveRecord* r = find(label);
    if (!r)
        throw arith_error("no bundled curve with label " + label);
    return WeierstrassModel::from_strings(r->coefficients);
}

IsogenyDescriptor descriptor_between(const std::string& from,
                                     const std::string& to) {
    std::string a = lower(from), b = lower(to);
    if (!find(a) || !find(b))
        throw arith_error("unknown curve label in pair " + from + ":" + to);

    std::map<std::string, std::pair<std::string, Z>> parent;  // label -> (prev, step degree)
    std::deque<std::string> queue{a};
    parent[a] = {a, 1};
    while (!queue.empty() && !parent.count(b)) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const Edge& e : table().edges) {
            std::string next;
            if (e.a == cur)
                next = e.b;
            else if (e.b == cur)
                next = e.a;
            else
                continue;
            if (!parent.count(next)) {
                parent[next] = {cur, e.degree};
                queue.push_back(next);
            }
        }
    }
    if (!parent.count(b))
        throw arith_error("no bundled isogeny between " + from + " and " + to);

    std::vector<std::pair<std::string, std::string>> hops;
    Z degree = 1;
    std::vector<Z> step_degrees;
    for (std::string cur = b; cur != a;) {
        auto [prev, step] = parent[cur];
        hops.emplace_back(prev, cur);
        step_degrees.push_back(step);
        degree *= step;
        cur = prev;
    }
    std::reverse(hops.begin(), hops.end());
    std::reverse(step_degrees.begin(), step_degrees.end());

    IsogenyDescriptor d{curve_by_label(a), curve_by_label(b), degree, {}};
    for (size_t i = 0; i < hops.size(); i++)
        d.chain.push_back({curve_by_label(hops[i].first),
                           curve_by_label(hops[i].second),
                           step_degrees[i]});
    return d;
}

}  // namespace isogrowth
