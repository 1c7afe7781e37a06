#include "numwall/numwall.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "numwall/wall.hpp"
#include "numwall/seqgen.hpp"
#include "run.hpp"

struct nw_field {
    nw::FieldPtr f;
};
struct nw_seq {
    nw::Seq s;
};
struct nw_wall {
    nw::Wall w;
};

namespace {

thread_local std::string g_error;

template <class F>
int guard(F&& body) {
    try {
        body();
        g_error.clear();
        return NW_OK;
    } catch (const nw::Error& e) {
        g_error = std::string(nw::errc_name(e.code())) + ": " + e.what();
        return static_cast<int>(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_error = std::string("ParseError: ") + e.what();
        return NW_E_PARSE_ERROR;
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return NW_E_UNKNOWN;
    } catch (const std::exception& e) {
        g_error = e.what();
        return NW_E_UNKNOWN;
    }
}

void require(const void* p, const char* what) {
    if (!p) nw::fail(nw::Errc::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* nw_last_error(void) { return g_error.c_str(); }

const char* nw_status_name(int status) {
    if (status == NW_E_UNKNOWN) return "Unknown";
    if (status < 0 || status > NW_E_IO_ERROR) return "Unknown";
    return nw::errc_name(static_cast<nw::Errc>(status));
}

const char* nw_version(void) { return "1.0.0"; }

void nw_string_free(char* s) { std::free(s); }
void nw_bytes_free(unsigned char* b) { std::free(b); }

int nw_field_parse(const char* spec, nw_field** out) {
    return guard([&] {
        require(spec, "spec");
        require(out, "out");
        *out = new nw_field{nw::Field::parse(spec)};
    });
}

void nw_field_free(nw_field* f) { delete f; }

uint32_t nw_field_q(const nw_field* f) { return f ? f->f->q() : 0; }

int nw_field_name(const nw_field* f, char** out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        *out = dup(f->f->name());
    });
}

namespace {
void check_elem(const nw::Field& f, uint32_t a) {
    if (!f.valid(a)) nw::fail(nw::Errc::invalid_argument, "code " + std::to_string(a) + " is not an element of " + f.name());
}
} // namespace

int nw_field_add(const nw_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        check_elem(*f->f, a);
        check_elem(*f->f, b);
        *out = f->f->add(a, b);
    });
}

int nw_field_mul(const nw_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        check_elem(*f->f, a);
        check_elem(*f->f, b);
        *out = f->f->mul(a, b);
    });
}

int nw_field_inv(const nw_field* f, uint32_t a, uint32_t* out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        check_elem(*f->f, a);
        *out = f->f->inv(a);
    });
}

int nw_seq_from_codes(const nw_field* f, const uint32_t* codes, size_t n, nw_seq** out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        if (n > 0) require(codes, "codes");
        nw::Seq s{f->f, {}, "literal"};
        for (size_t i = 0; i < n; ++i) {
            check_elem(*f->f, codes[i]);
            s.v.push_back(codes[i]);
        }
        *out = new nw_seq{std::move(s)};
    });
}

int nw_seq_from_symbols(const nw_field* f, const int64_t* symbols, size_t n, nw_seq** out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        if (n > 0) require(symbols, "symbols");
        nw::SeqRecipe rc;
        rc.kind = nw::SeqRecipe::Kind::literal;
        rc.field = f->f;
        rc.values.assign(symbols, symbols + n);
        *out = new nw_seq{nw::materialize(rc)};
    });
}

int nw_seq_paper_folding(const nw_field* f, unsigned level, int64_t length, nw_seq** out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        nw::SeqRecipe rc;
        rc.kind = nw::SeqRecipe::Kind::paper_folding;
        rc.field = f->f;
        rc.level = level;
        rc.length = length;
        *out = new nw_seq{nw::materialize(rc)};
    });
}

int nw_seq_random(const nw_field* f, uint64_t seed, int64_t length, nw_seq** out) {
    return guard([&] {
        require(f, "field");
        require(out, "out");
        nw::SeqRecipe rc;
        rc.kind = nw::SeqRecipe::Kind::random;
        rc.field = f->f;
        rc.seed = seed;
        rc.length = length;
        *out = new nw_seq{nw::materialize(rc)};
    });
}

void nw_seq_free(nw_seq* s) { delete s; }

size_t nw_seq_length(const nw_seq* s) { return s ? s->s.v.size() : 0; }

int nw_seq_get(const nw_seq* s, int64_t i, uint32_t* out) {
    return guard([&] {
        require(s, "sequence");
        require(out, "out");
        if (i < 1 || i > s->s.size()) nw::fail(nw::Errc::out_of_support, "index " + std::to_string(i) + " outside 1.." + std::to_string(s->s.size()));
        *out = s->s.at(i);
    });
}

int nw_wall_build(const nw_seq* s, int method, nw_wall** out) {
    return guard([&] {
        require(s, "sequence");
        require(out, "out");
        if (method != 0 && method != 1) nw::fail(nw::Errc::invalid_argument, "method must be 0 (frame) or 1 (oracle)");
        *out = new nw_wall{method == 0 ? nw::Wall::frame(s->s) : nw::Wall::naive(s->s)};
    });
}

void nw_wall_free(nw_wall* w) { delete w; }

int nw_wall_extend(nw_wall* w, uint32_t code) {
    return guard([&] {
        require(w, "wall");
        check_elem(*w->w.field(), code);
        w->w.extend(code);
    });
}

int64_t nw_wall_length(const nw_wall* w) { return w ? w->w.length() : -1; }
int64_t nw_wall_depth(const nw_wall* w) { return w ? w->w.depth() : -1; }

int nw_wall_get(const nw_wall* w, int64_t m, int64_t n, uint32_t* out) {
    return guard([&] {
        require(w, "wall");
        require(out, "out");
        *out = w->w.at(m, n);
    });
}

int nw_wall_equal(const nw_wall* a, const nw_wall* b, int* out) {
    return guard([&] {
        require(a, "wall");
        require(b, "wall");
        require(out, "out");
        *out = a->w.same_entries(b->w) ? 1 : 0;
    });
}

int nw_wall_csv(const nw_wall* w, char** out) {
    return guard([&] {
        require(w, "wall");
        require(out, "out");
        *out = dup(nw::wall_csv(w->w));
    });
}

int nw_wall_windows_json(const nw_wall* w, char** out) {
    return guard([&] {
        require(w, "wall");
        require(out, "out");
        nw::json arr = nw::json::array();
        for (const nw::WindowRec& rec : nw::detect_windows(w->w)) {
            nw::json j{{"l", rec.l}, {"n", rec.n}, {"m", rec.m}, {"status", nw::status_name(rec.status)}};
            if (rec.ratios) j["ratios"] = {{"P", rec.ratios->P}, {"Q", rec.ratios->Q}, {"R", rec.ratios->R}, {"S", rec.ratios->S}};
            arr.push_back(j);
        }
        *out = dup(arr.dump());
    });
}

int nw_wall_ppm(const nw_wall* w, unsigned char** out, size_t* len) {
    return guard([&] {
        require(w, "wall");
        require(out, "out");
        require(len, "len");
        std::string img = nw::wall_ppm(w->w);
        auto* buf = static_cast<unsigned char*>(std::malloc(img.size()));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, img.data(), img.size());
        *out = buf;
        *len = img.size();
    });
}

int nw_run(const char* config_json, char** report, int* verdict) {
    return guard([&] {
        require(config_json, "config");
        require(report, "report");
        require(verdict, "verdict");
        nw::json cfg;
        try {
            cfg = nw::json::parse(config_json);
        } catch (const nw::json::parse_error& e) {
            nw::fail(nw::Errc::parse_error, std::string("config is not valid JSON: ") + e.what());
        }
        nw::RunOutput out = nw::run_config(cfg);
        *report = dup(out.report);
        *verdict = out.verdict;
    });
}

} // extern "C"
