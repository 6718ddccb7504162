#include "mrm/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "mrm/multiplicity.hpp"

namespace mrm::cli {

namespace {

std::shared_ptr<const Field> make_field(const CodeSpec& spec) {
    return Field::make(spec.p, spec.t);
}

void check_spec(const CodeSpec& spec, const Field& f) {
    if (spec.m < 1) throw InvalidParameter("m must be at least 1");
    if (spec.s < 1) throw InvalidParameter("s must be at least 1");
    if (spec.d < 0 || spec.d >= static_cast<std::int64_t>(spec.s) * f.order())
        throw DegreeOutOfRange("degree out of range (require 0 <= d < s*q)");
}

// Strips a '#' comment, then splits on whitespace.
std::vector<std::string> tokens_of_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::uint32_t parse_symbol(const std::string& tok, std::uint32_t q) {
    std::uint64_t v = 0;
    if (tok.empty()) throw ParseError("empty symbol");
    for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError("invalid symbol '" + tok + "'");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v >= (1ull << 32)) throw ParseError("symbol '" + tok + "' out of range");
    }
    if (v >= q) throw ParseError("symbol " + tok + " is not an element index of GF(" +
                                 std::to_string(q) + ")");
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> read_message_file(const std::string& path, std::uint32_t q,
                                             std::size_t expected) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<std::uint32_t> out;
    std::string line;
    while (std::getline(in, line))
        for (const std::string& tok : tokens_of_line(line)) out.push_back(parse_symbol(tok, q));
    if (out.size() != expected)
        throw LengthMismatch("message file holds " + std::to_string(out.size()) +
                             " symbols, expected " + std::to_string(expected));
    return out;
}

// n lines of sigma entries each (comment and blank lines skipped).
std::vector<std::uint32_t> read_codeword_file(const std::string& path, std::uint32_t q,
                                              std::size_t n, std::size_t sigma) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<std::uint32_t> out;
    out.reserve(n * sigma);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        auto toks = tokens_of_line(line);
        if (toks.empty()) continue;
        if (toks.size() != sigma)
            throw ShapeMismatch("codeword line has " + std::to_string(toks.size()) +
                                " entries, expected " + std::to_string(sigma));
        for (const std::string& tok : toks) out.push_back(parse_symbol(tok, q));
        ++rows;
    }
    if (rows != n)
        throw ShapeMismatch("codeword file has " + std::to_string(rows) + " positions, expected " +
                            std::to_string(n));
    return out;
}

std::string read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string text, line;
    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        text += body;
        text += ' ';
    }
    return text;
}

int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& body,
                std::ostream& err) {
    if (out_path.empty()) {
        body(std::cout);
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return kExitBadData;
    }
    body(out);
    return kExitOk;
}

int report(const std::exception& e, std::ostream& err, int code) {
    err << "error: " << e.what() << "\n";
    return code;
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InvalidParameter& e) {
        return report(e, err, kExitBadParams);
    } catch (const DataError& e) {
        return report(e, err, kExitBadData);
    } catch (const Error& e) {
        return report(e, err, kExitBadData);
    } catch (const std::exception& e) {
        return report(e, err, kExitBadData);
    }
}

}  // namespace

int run_params(const CodeSpec& spec, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        auto field = make_field(spec);
        check_spec(spec, *field);
        std::uint32_t q = field->order();

        std::uint64_t n = 1;
        for (std::uint32_t l = 0; l < spec.m; ++l) {
            if (n > ~0ull / q) throw UnsupportedSize("q^m overflows 64 bits");
            n *= q;
        }
        std::uint64_t sigma = binomial(static_cast<std::uint64_t>(spec.m) + spec.s - 1, spec.m);
        if (sigma > (1ull << 20))
            throw UnsupportedSize("more than 2^20 derivative orders per position");
        std::uint64_t k = binomial(static_cast<std::uint64_t>(spec.m) + spec.d, spec.m);

        out << "p=" << spec.p << "\n"
            << "t=" << spec.t << "\n"
            << "q=" << q << "\n"
            << "m=" << spec.m << "\n"
            << "s=" << spec.s << "\n"
            << "d=" << spec.d << "\n"
            << "n=" << n << "\n"
            << "sigma=" << sigma << "\n"
            << "k=" << k << "\n";

        std::uint64_t total = 0;
        std::int64_t dmax = static_cast<std::int64_t>(spec.m) * (q - 1);
        for (const MultiIndex& j :
             multi_indices_up_to_weight(spec.m, static_cast<std::int64_t>(spec.s) - 1,
                                        spec.s - 1)) {
            std::int64_t dj = std::min<std::int64_t>(
                dmax, spec.d - static_cast<std::int64_t>(j.weight()) * q);
            std::uint64_t size = dj >= 0 ? rm_dimension(q, spec.m, dj) : 0;
            total += size;
            out << "j=" << j.str() << " d_j=" << dj << " I_j=" << size << "\n";
        }
        out << "infoset=" << total << "\n";
        if (total != k) throw Error("information set size does not match k");
        return kExitOk;
    });
}

int run_encode(const CodeSpec& spec, const std::string& in_path, const std::string& out_path,
               EncodeMode mode, std::ostream& err) {
    return run_guarded(err, [&] {
        auto field = make_field(spec);
        check_spec(spec, *field);
        MultCode code(field, spec.m, spec.s, spec.d);

        Codeword cw(field, 0, 0);
        if (mode == EncodeMode::Monomial) {
            // coefficients in graded-lex order of the degree-<=d monomials
            auto coeffs = read_message_file(in_path, field->order(), code.message_length());
            auto basis = multi_indices_up_to_weight(
                spec.m, spec.d, static_cast<std::uint32_t>(spec.d));
            if (basis.size() != coeffs.size())
                throw Error("monomial basis size does not match the message length");
            MVPoly f(field, spec.m);
            for (std::size_t i = 0; i < basis.size(); ++i) f.add_term_index(basis[i], coeffs[i]);
            cw = code.evaluate(f);
        } else {
            auto symbols = read_message_file(in_path, field->order(), code.message_length());
            Message msg;
            msg.reserve(symbols.size());
            for (std::uint32_t v : symbols) msg.push_back(field->element(v));
            cw = mode == EncodeMode::Fast ? code.encode_systematic_fast(msg)
                                          : code.encode_systematic(msg);
        }

        return with_output(out_path, [&](std::ostream& os) {
            for (std::size_t pos = 0; pos < cw.positions(); ++pos) {
                for (std::size_t slot = 0; slot < cw.slots(); ++slot) {
                    if (slot) os << ' ';
                    os << cw.index_at(pos, slot);
                }
                os << '\n';
            }
        }, err);
    });
}

int run_extract(const CodeSpec& spec, const std::string& in_path, const std::string& out_path,
                std::ostream& err) {
    return run_guarded(err, [&] {
        auto field = make_field(spec);
        check_spec(spec, *field);
        MultCode code(field, spec.m, spec.s, spec.d);

        auto raw = read_codeword_file(in_path, field->order(), code.length(),
                                      code.symbols_per_position());
        Codeword cw(field, code.length(), code.symbols_per_position());
        for (std::size_t pos = 0; pos < code.length(); ++pos)
            for (std::size_t slot = 0; slot < code.symbols_per_position(); ++slot)
                cw.set_index(pos, slot, raw[pos * code.symbols_per_position() + slot]);

        Message msg = code.extract_message(cw);
        return with_output(out_path, [&](std::ostream& os) {
            for (const auto& v : msg) os << v.index() << '\n';
        }, err);
    });
}

int run_decompose(const CodeSpec& spec, const std::string& in_path, const std::string& out_path,
                  std::ostream& err) {
    return run_guarded(err, [&] {
        auto field = make_field(spec);
        check_spec(spec, *field);
        MultCode code(field, spec.m, spec.s, spec.d);

        MVPoly f = MVPoly::from_text(field, spec.m, read_poly_file(in_path));
        if (f.degree() > spec.d)
            throw DegreeTooLarge("polynomial degree " + std::to_string(f.degree()) +
                                 " exceeds d=" + std::to_string(spec.d));
        Decomposition dec = code.decompose(f);
        if (code.recompose(dec) != f) throw Error("recomposition check failed");

        return with_output(out_path, [&](std::ostream& os) {
            for (const auto& [j, fj] : dec)
                os << "j=" << j.str() << " deg=" << fj.degree() << " poly=" << fj.to_text()
                   << "\n";
        }, err);
    });
}

}  // namespace mrm::cli
