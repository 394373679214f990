#include "zplat.h"

#include "lattice_json.hpp"
#include "report.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace zplat;

struct zpl_lattice {
    Lattice impl;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_diag(char** diag, const std::string& msg) {
    if (diag) *diag = dup_string(msg);
}

zpl_status status_of(const Error& e) { return static_cast<zpl_status>(static_cast<int>(e.code())); }

template <typename F>
zpl_status guarded(char** diag, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        set_diag(diag, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_diag(diag, e.what());
        return ZPL_ERR_INTERNAL;
    }
}

std::optional<CharacterProfile> parse_profile(const char* text, const Lattice& L) {
    if (!text) return std::nullopt;
    CharacterProfile cp{L.p, L.n, {}};
    std::string cur;
    std::string s(text);
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            if (cur.empty()) throw BadArgumentError("reference profile: empty entry");
            try {
                cp.m.push_back(std::stol(cur));
            } catch (const std::exception&) {
                throw BadArgumentError("reference profile: bad entry '" + cur + "'");
            }
            cur.clear();
        } else {
            cur.push_back(s[i]);
        }
    }
    if (static_cast<long>(cp.m.size()) != L.n + 1)
        throw BadArgumentError("reference profile needs n+1 entries");
    return cp;
}

}  // namespace

extern "C" {

const char* zpl_status_name(zpl_status s) {
    switch (s) {
        case ZPL_OK: return "ok";
        case ZPL_ERR_SYNTAX: return "syntax_error";
        case ZPL_ERR_VALIDATION: return "validation_error";
        case ZPL_ERR_VERSION: return "version_error";
        case ZPL_ERR_BAD_LEVEL: return "bad_level";
        case ZPL_ERR_CAP: return "cap_exceeded";
        case ZPL_ERR_UNSUPPORTED: return "unsupported";
        case ZPL_ERR_BAD_ARGUMENT: return "bad_argument";
        case ZPL_ERR_INCONSISTENT: return "inconsistent";
        case ZPL_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

void zpl_string_free(char* s) { ::operator delete(s); }

zpl_status zpl_lattice_parse(const char* text, int strict, zpl_lattice** out, char** diag) {
    if (!text || !out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        *out = new zpl_lattice{parse_lattice(text, strict != 0)};
        return ZPL_OK;
    });
}

zpl_status zpl_lattice_catalog(const char* kind, long p, long n, long level, zpl_lattice** out,
                               char** diag) {
    if (!kind || !out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&]() -> zpl_status {
        std::string k(kind);
        unsigned long up = static_cast<unsigned long>(p);
        if (k == "permutation")
            *out = new zpl_lattice{permutation_lattice(up, n, level)};
        else if (k == "cyclotomic")
            *out = new zpl_lattice{cyclotomic_lattice(up, n, level)};
        else if (k == "augmentation")
            *out = new zpl_lattice{augmentation_ideal(up, n)};
        else
            throw BadArgumentError("unknown catalog kind '" + k + "'");
        return ZPL_OK;
    });
}

zpl_status zpl_lattice_random(long p, long n, uint64_t seed, long max_rank, zpl_lattice** out,
                              char** diag) {
    if (!out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        *out = new zpl_lattice{random_lattice(static_cast<unsigned long>(p), n, seed, max_rank)
                                   .lattice};
        return ZPL_OK;
    });
}

void zpl_lattice_free(zpl_lattice* L) { delete L; }

long zpl_lattice_rank(const zpl_lattice* L) { return L ? L->impl.rank : -1; }
long zpl_lattice_p(const zpl_lattice* L) { return L ? static_cast<long>(L->impl.p) : -1; }
long zpl_lattice_n(const zpl_lattice* L) { return L ? L->impl.n : -1; }

zpl_status zpl_lattice_serialize(const zpl_lattice* L, char** out, char** diag) {
    if (!L || !out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        *out = dup_string(serialize_lattice(L->impl));
        return ZPL_OK;
    });
}

zpl_status zpl_report_cohomology(const zpl_lattice* L, long level, char** out, char** diag) {
    if (!L || !out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        *out = dup_string(report_cohomology(L->impl, level));
        return ZPL_OK;
    });
}

zpl_status zpl_report_pipeline(const zpl_lattice* L, char** out, char** diag) {
    if (!L || !out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        *out = dup_string(report_pipeline(L->impl));
        return ZPL_OK;
    });
}

zpl_status zpl_report_decompose(const zpl_lattice* L, long group_level,
                                const char* reference_profile, char** out, char** diag) {
    if (!L || !out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        *out = dup_string(
            report_decompose(L->impl, group_level, parse_profile(reference_profile, L->impl)));
        return ZPL_OK;
    });
}

zpl_status zpl_report_ext(long p, int modp2, char** out, char** diag) {
    if (!out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        *out = dup_string(report_ext(static_cast<unsigned long>(p), modp2 != 0));
        return ZPL_OK;
    });
}

zpl_status zpl_report_enumerate(long p, const long* rank_caps, size_t n_caps, uint64_t size_cap,
                                char** out, char** diag) {
    if (!out || (!rank_caps && n_caps > 0)) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        std::vector<long> d(rank_caps, rank_caps + n_caps);
        *out = dup_string(report_enumerate(static_cast<unsigned long>(p), d, size_cap));
        return ZPL_OK;
    });
}

zpl_status zpl_report_bounds(const char* formula, const char* params, char** out, char** diag) {
    if (!formula || !out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&] {
        std::map<std::string, std::string> kv;
        if (params) {
            std::string s(params), key, val;
            bool in_val = false;
            auto flush = [&] {
                if (!key.empty()) kv[key] = val;
                key.clear();
                val.clear();
                in_val = false;
            };
            for (char ch : s) {
                if (ch == ',') {
                    flush();
                } else if (ch == '=' && !in_val) {
                    in_val = true;
                } else {
                    (in_val ? val : key).push_back(ch);
                }
            }
            flush();
        }
        *out = dup_string(report_bounds(formula, kv));
        return ZPL_OK;
    });
}

zpl_status zpl_report_verify(uint64_t seed, uint64_t cap, char** out, char** diag) {
    if (!out) {
        set_diag(diag, "null argument");
        return ZPL_ERR_BAD_ARGUMENT;
    }
    return guarded(diag, [&]() -> zpl_status {
        std::string rep = report_verify(seed, cap);
        *out = dup_string(rep);
        if (rep.find("\nFAIL ") != std::string::npos) {
            set_diag(diag, "verify suite reported failures");
            return ZPL_ERR_INTERNAL;
        }
        return ZPL_OK;
    });
}

}  // extern "C"
