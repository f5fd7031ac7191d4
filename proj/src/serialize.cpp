#include "midcube/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace midcube {

using nlohmann::json;

json to_json(const Subset& s) { return s.elements(); }

void write_edge_list(std::ostream& out, const SparseGraph& g) {
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

SparseGraph read_edge_list(std::istream& in) {
    std::string tag;
    std::size_t vertices = 0;
    std::size_t edge_count = 0;
    if (!(in >> tag >> vertices >> edge_count) || tag != "p") throw ParseError("edge list: missing 'p' header");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        Vertex u = 0;
        Vertex v = 0;
        if (!(in >> tag >> u >> v) || tag != "e") throw ParseError("edge list: bad edge line " + std::to_string(i + 1));
        edges.emplace_back(u, v);
    }
    return SparseGraph::from_edges(vertices, edges);
}

json graph_to_json(const SparseGraph& g) {
    json j;
    j["num_vertices"] = g.num_vertices();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (const auto& labels = g.labels()) {
        json arr = json::array();
        for (const Subset& s : *labels) arr.push_back(to_json(s));
        j["labels"] = std::move(arr);
    }
    return j;
}

namespace {

template <typename M>
void write_matrix_impl(std::ostream& out, const M& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ' ';
            out << m(r, c).get_str();
        }
        out << '\n';
    }
}

}  // namespace

void write_matrix(std::ostream& out, const RationalMatrix& m) { write_matrix_impl(out, m); }
void write_matrix(std::ostream& out, const IntMatrix& m) { write_matrix_impl(out, m); }

RationalMatrix read_matrix(std::istream& in) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(in >> rows >> cols)) throw ParseError("matrix: missing 'rows cols' header");
    RationalMatrix m(rows, cols);
    std::string token;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(in >> token)) throw ParseError("matrix: truncated at row " + std::to_string(r));
            BigRational value;
            if (value.set_str(token, 10) != 0 || sgn(value.get_den()) == 0)
                throw ParseError("matrix: bad entry '" + token + "'");
            value.canonicalize();
            m(r, c) = value;
        }
    return m;
}

void write_block(std::ostream& out, const EigenbasisBlock& block) {
    out << block.k << ' ' << block.r << ' ' << block.eigenvalue << ' ' << block.vectors.rows() << ' '
        << block.vectors.cols() << '\n';
    write_matrix(out, block.vectors);
}

EigenbasisBlock read_block(std::istream& in) {
    EigenbasisBlock block;
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(in >> block.k >> block.r >> block.eigenvalue >> rows >> cols)) throw ParseError("block: bad header");
    block.vectors = read_matrix(in);
    if (block.vectors.rows() != rows || block.vectors.cols() != cols)
        throw ParseError("block: header dimensions disagree with matrix");
    return block;
}

json spectrum_to_json(const SpectrumTable& table) {
    json j;
    if (table.order().fits_ulong_p())
        j["order"] = table.order().get_ui();
    else
        j["order"] = table.order().get_str();
    json values = json::array();
    for (const auto& [value, mult] : table.entries())
        values.push_back({{"value", value}, {"multiplicity", mult.get_str()}});
    j["eigenvalues"] = std::move(values);
    return j;
}

SpectrumTable spectrum_from_json(const json& j) {
    try {
        const json& order = j.at("order");
        SpectrumTable table(order.is_string() ? BigInt(order.get<std::string>()) : BigInt(order.get<unsigned long>()));
        for (const auto& e : j.at("eigenvalues"))
            table.add(e.at("value").get<long>(), BigInt(e.at("multiplicity").get<std::string>()));
        return table;
    } catch (const json::exception& e) {
        throw ParseError(std::string("spectrum json: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("spectrum json: multiplicity is not a decimal integer");
    }
}

json certificate_to_json(const CycleCertificate& c, const SparseGraph& g) {
    json j;
    j["order"] = c.graph_order;
    j["cycle"] = c.vertices;
    if (const auto& labels = g.labels()) {
        json arr = json::array();
        for (Vertex v : c.vertices) arr.push_back(to_json((*labels)[v]));
        j["labels"] = std::move(arr);
    }
    return j;
}

CycleCertificate certificate_from_json(const json& j) {
    try {
        return {j.at("cycle").get<std::vector<Vertex>>(), j.at("order").get<std::size_t>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate json: ") + e.what());
    }
}

}  // namespace midcube
