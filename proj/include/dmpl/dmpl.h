/* Copyright 2026 The dmpl Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the dmpl shared library.
 *
 * Every call that can fail returns a dmpl_status and records a message that
 * dmpl_last_error() returns until the next call on the same context. A
 * context may be used by one thread at a time; distinct contexts are
 * independent. Strings returned by accessors stay valid until the owning
 * object is destroyed.
 *
 * Requests and reports are JSON documents (UTF-8). Exact values use the
 * scalar grammar: "p/q", "a+bi" with rational a, b, or "v mod p".
 */
#ifndef DMPL_DMPL_H
#define DMPL_DMPL_H

#if defined(_WIN32)
#  if defined(DMPL_BUILDING)
#    define DMPL_API __declspec(dllexport)
#  else
#    define DMPL_API __declspec(dllimport)
#  endif
#else
#  define DMPL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DMPL_ABI_VERSION 1

typedef enum dmpl_status {
    DMPL_OK = 0,
    DMPL_ERR_IDENTITY = 1, /* a check ran and failed; the result is still returned */
    DMPL_ERR_PARSE = 2,    /* malformed literal or request */
    DMPL_ERR_POLE = 3,     /* a denominator vanished */
    DMPL_ERR_DOMAIN = 4,   /* well-formed but outside the supported domain */
    DMPL_ERR_INTERNAL = 5
} dmpl_status;

typedef struct dmpl_context dmpl_context;
typedef struct dmpl_result dmpl_result;

DMPL_API int dmpl_abi_version(void);
DMPL_API const char* dmpl_version(void);
DMPL_API const char* dmpl_status_name(dmpl_status s);

DMPL_API dmpl_status dmpl_context_create(dmpl_context** out);
DMPL_API void dmpl_context_destroy(dmpl_context* ctx);
/* Message of the last failed call, "" after a successful one. */
DMPL_API const char* dmpl_last_error(const dmpl_context* ctx);

/* Evaluates one sum. subject: li-tilde | li-sh | li-star | iterated |
 * connected | r-value | word-L | word-I. args_json keys: index, l, x, z, xi,
 * a, b, word, n, inclusive (see the JSON schema document). */
DMPL_API dmpl_status dmpl_eval(dmpl_context* ctx, const char* subject, const char* args_json, dmpl_result** out);

/* Runs one campaign. Keys absent from campaign_json take the defaults of its
 * "tag"; unknown keys are rejected. Returns DMPL_ERR_IDENTITY when any case
 * failed. */
DMPL_API dmpl_status dmpl_verify(dmpl_context* ctx, const char* campaign_json, dmpl_result** out);

/* Runs one trend check ({"claim": ..., "n_list": [...], ...}) or, with claim
 * "defaults", every default trend case. Returns DMPL_ERR_IDENTITY when a
 * trend flag fails. */
DMPL_API dmpl_status dmpl_trend(dmpl_context* ctx, const char* trend_json, dmpl_result** out);

/* Default campaign of a tag as JSON. */
DMPL_API dmpl_status dmpl_default_campaign(dmpl_context* ctx, const char* tag, dmpl_result** out);

DMPL_API const char* dmpl_result_text(const dmpl_result* r);
DMPL_API const char* dmpl_result_json(const dmpl_result* r);
/* CSV rows of a trend result; "" otherwise. */
DMPL_API const char* dmpl_result_csv(const dmpl_result* r);
DMPL_API void dmpl_result_destroy(dmpl_result* r);

#ifdef __cplusplus
}
#endif

#endif /* DMPL_DMPL_H */
