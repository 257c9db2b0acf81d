#include "plsurf/documents.hpp"

namespace plsurf {

namespace {

const Json& field(const Json& doc, const char* name)
{
    auto it = doc.find(name);
    if (it == doc.end())
        throw InputError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::size_t count_field(const Json& doc, const char* name, std::size_t min_value)
{
    const Json& j = field(doc, name);
    if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(min_value))
        throw InputError(std::string("field \"") + name + "\" must be an integer >= " + std::to_string(min_value));
    return j.get<std::size_t>();
}

const Json& array_field(const Json& doc, const char* name)
{
    const Json& j = field(doc, name);
    if (!j.is_array())
        throw InputError(std::string("field \"") + name + "\" must be an array");
    return j;
}

// Checks the common header and returns the dimension.
std::size_t read_header(const Json& doc, const char* format)
{
    if (!doc.is_object())
        throw InputError("document must be a JSON object");
    if (auto it = doc.find("format"); it != doc.end() && (!it->is_string() || it->get<std::string>() != format))
        throw InputError(std::string("expected a \"") + format + "\" document");
    if (auto it = doc.find("version"); it != doc.end() && (!it->is_number_integer() || it->get<int>() != kDocumentVersion))
        throw InputError("unsupported document version");
    return count_field(doc, "dim", 1);
}

Json header(std::size_t dim, const char* format)
{
    return Json{{"dim", dim}, {"format", format}, {"version", kDocumentVersion}};
}

Json word_json(const PLWord& w)
{
    Json a = Json::array();
    for (const auto& l : w.letters)
        a.push_back(vector_json(l));
    return a;
}

PLWord word_from_json(const Json& j, std::size_t dim)
{
    if (!j.is_array())
        throw InputError("a path must be an array of vectors");
    PLWord w(dim);
    for (const auto& l : j)
        w.letters.push_back(vector_from_json(l, dim));
    return w;
}

} // namespace

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_document(const Json& doc) { return doc.dump() + "\n"; }

Json rational_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j)
{
    if (!j.is_string())
        throw InputError("rationals must be strings of the form \"p/q\"");
    return parse_rational(j.get<std::string>());
}

Json vector_json(const RatVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(rational_json(x));
    return a;
}

RatVector vector_from_json(const Json& j, std::size_t dim)
{
    if (!j.is_array() || j.size() != dim)
        throw InputError("expected a vector of " + std::to_string(dim) + " rationals");
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = rational_from_json(j[i]);
    return v;
}

std::string word_key(const Word& w, std::size_t dim)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (dim > 9 && i > 0)
            s += ',';
        s += std::to_string(w[i] + 1);
    }
    return s;
}

Word parse_word_key(const std::string& key, std::size_t dim)
{
    Word w;
    if (key.empty())
        return w;
    auto letter = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
            throw InputError("bad word key \"" + key + "\"");
        int v = std::stoi(t);
        if (v < 1 || static_cast<std::size_t>(v) > dim)
            throw InputError("word key letter out of range in \"" + key + "\"");
        w.push_back(v - 1);
    };
    if (dim <= 9) {
        for (char c : key)
            letter(std::string(1, c));
    } else {
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = key.find(',', start);
            letter(key.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    return w;
}

Json path_document(const PLWord& w)
{
    Json d = header(w.dim, "path");
    d["word"] = word_json(w);
    return d;
}

PLWord parse_path_document(const Json& doc)
{
    std::size_t dim = read_header(doc, "path");
    return word_from_json(array_field(doc, "word"), dim);
}

Json kite_word_document(const KiteWord& x)
{
    Json d = header(x.dim, "kite-word");
    d["convention"] = kKiteConvention;
    Json ks = Json::array();
    for (const auto& k : x.kites)
        ks.push_back(Json{{"tail", word_json(k.tail)}, {"loop", word_json(k.loop)}, {"sign", k.sign}});
    d["kites"] = ks;
    return d;
}

KiteWord parse_kite_word_document(const Json& doc)
{
    std::size_t dim = read_header(doc, "kite-word");
    if (auto it = doc.find("convention"); it != doc.end() && *it != kKiteConvention)
        throw InputError("unsupported kite-word convention");
    KiteWord x(dim);
    for (const auto& kj : array_field(doc, "kites")) {
        if (!kj.is_object())
            throw InputError("each kite must be an object");
        Kite k;
        k.tail = word_from_json(field(kj, "tail"), dim);
        k.loop = word_from_json(field(kj, "loop"), dim);
        const Json& s = field(kj, "sign");
        if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1))
            throw InputError("kite sign must be 1 or -1");
        k.sign = s.get<int>();
        if (!is_planar_loop(k.loop))
            throw InputError("kite loop is not a planar loop");
        x.kites.push_back(std::move(k));
    }
    return x;
}

Json tensor_map(const TruncatedTensor& t)
{
    Json m = Json::object();
    for (const auto& [w, c] : t.terms)
        m[word_key(w, t.dim)] = rational_json(c);
    return m;
}

TruncatedTensor parse_tensor_map(const Json& j, std::size_t dim, std::size_t level)
{
    if (!j.is_object())
        throw InputError("tensor must be an object of word keys");
    TruncatedTensor t(dim, level);
    for (const auto& [k, v] : j.items()) {
        Word w = parse_word_key(k, dim);
        if (w.size() > level)
            throw InputError("word key \"" + k + "\" exceeds the level");
        t.add_term(w, rational_from_json(v));
    }
    return t;
}

Json current_map(const PolyCurrent& g)
{
    Json m = Json::object();
    for (const auto& [k, c] : g.terms)
        m[format_key(k)] = rational_json(c);
    return m;
}

PolyCurrent parse_current_map(const Json& j, std::size_t dim, int max_weight)
{
    if (!j.is_object())
        throw InputError("current must be an object of monomial keys");
    PolyCurrent g(dim, 2, max_weight);
    for (const auto& [k, v] : j.items()) {
        MonomialKey key = parse_key(k, dim);
        if (key.wedge.size() != 2 || key.weight() > max_weight)
            throw InputError("bad current key \"" + k + "\"");
        g.add_term(key, rational_from_json(v));
    }
    return g;
}

Json signature_document(const TruncatedTensor& sig)
{
    Json d = header(sig.dim, "signature");
    d["level"] = sig.level;
    d["signature"] = tensor_map(sig);
    return d;
}

TruncatedTensor parse_signature_document(const Json& doc)
{
    std::size_t dim = read_header(doc, "signature");
    return parse_tensor_map(field(doc, "signature"), dim, count_field(doc, "level", 0));
}

Json surface_signature_document(const SurfaceSignature& s)
{
    Json d = header(s.boundary.dim, "surface-signature");
    d["level"] = s.boundary.level;
    d["weight"] = s.gamma.max_weight;
    d["boundary"] = tensor_map(s.boundary);
    d["gamma"] = current_map(s.gamma);
    return d;
}

SurfaceSignature parse_surface_signature_document(const Json& doc)
{
    std::size_t dim = read_header(doc, "surface-signature");
    std::size_t level = count_field(doc, "level", 0);
    int weight = static_cast<int>(count_field(doc, "weight", 0));
    return {parse_tensor_map(field(doc, "boundary"), dim, level), parse_current_map(field(doc, "gamma"), dim, weight)};
}

Json plsc_document(const PLSC& c, bool compatible)
{
    Json d = header(c.dim, "plsc");
    Json vs = Json::array();
    for (const auto& v : c.vertices)
        vs.push_back(vector_json(v));
    d["vertices"] = vs;
    d["edges"] = c.edges;
    d["faces"] = c.faces;
    d["compatible"] = compatible;
    return d;
}

PLSC parse_plsc_document(const Json& doc)
{
    PLSC c;
    c.dim = read_header(doc, "plsc");
    for (const auto& v : array_field(doc, "vertices"))
        c.vertices.push_back(vector_from_json(v, c.dim));
    auto index = [&](const Json& j) {
        if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<std::size_t>() >= c.vertices.size())
            throw InputError("vertex index out of range");
        return j.get<std::size_t>();
    };
    for (const auto& e : array_field(doc, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("edges must be index pairs");
        c.edges.push_back({index(e[0]), index(e[1])});
    }
    for (const auto& f : array_field(doc, "faces")) {
        if (!f.is_array() || f.size() != 3)
            throw InputError("faces must be index triples");
        c.faces.push_back({index(f[0]), index(f[1]), index(f[2])});
    }
    return c;
}

TriangulationInput parse_triangulation_input(const Json& doc)
{
    std::size_t dim = read_header(doc, "edges-polygons");
    TriangulationInput in;
    for (const auto& e : array_field(doc, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("an edge is a pair of points");
        in.edges.push_back({vector_from_json(e[0], dim), vector_from_json(e[1], dim)});
    }
    for (const auto& p : array_field(doc, "polygons")) {
        if (!p.is_array() || p.size() != 3)
            throw InputError("a polygon is a triple of points");
        Triangle t{vector_from_json(p[0], dim), vector_from_json(p[1], dim), vector_from_json(p[2], dim)};
        if (!t.nondegenerate())
            throw InputError("degenerate polygon");
        in.polygons.push_back(std::move(t));
    }
    return in;
}

Json report_document(const DecisionReport& r, std::size_t dim)
{
    Json d = header(dim, "decision-report");
    d["verdict"] = r.verdict == Verdict::equal ? "equal" : "not_equal";
    d["boundary_check"] = Json{{"x", word_json(r.boundary_x)}, {"y", word_json(r.boundary_y)}, {"equal", r.boundary_equal}};
    Json ch = Json::array();
    for (const auto& [f, m] : r.chain) {
        const auto& ids = r.complex.faces[f];
        Json face = Json::array();
        for (auto i : ids)
            face.push_back(vector_json(r.complex.vertices[i]));
        ch.push_back(Json{{"face", face}, {"multiplicity", m}});
    }
    d["chain"] = ch;
    if (!r.witness) {
        d["witness"] = nullptr;
    } else if (r.witness->kind == Witness::Kind::boundary) {
        d["witness"] = Json{{"kind", "boundary"}};
    } else {
        Json face = Json::array();
        for (const auto& p : r.witness->face)
            face.push_back(vector_json(p));
        d["witness"] = Json{{"kind", "face"}, {"face", face}, {"multiplicity", r.witness->multiplicity}};
    }
    if (r.signature)
        d["signature_excerpt"] = Json{{"level", r.level},
                                      {"weight", r.max_weight},
                                      {"boundary", tensor_map(r.signature->boundary)},
                                      {"gamma", current_map(r.signature->gamma)}};
    else
        d["signature_excerpt"] = nullptr;
    return d;
}

} // namespace plsurf
