#ifndef HOMOBRAID_H
#define HOMOBRAID_H

/* C interface to libhomobraid.
 *
 * Every function returning hb_status reports failures through the status and
 * records a message (and, where meaningful, a position) retrievable with
 * hb_last_error / hb_last_error_position on the calling thread.
 * Strings handed out by the library are released with hb_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HB_API __declspec(dllexport)
#else
#define HB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
  HB_OK = 0,
  HB_ERR_PARSE = 1,
  HB_ERR_INVALID_ARGUMENT = 2,
  HB_ERR_NOT_HOMOGENEOUS = 3,
  HB_ERR_SPLIT = 4,
  HB_ERR_DESTABILIZABLE = 5,
  HB_ERR_NON_ESSENTIAL_EDGE = 6,
  HB_ERR_UNKNOWN_VEERING = 7,
  HB_ERR_INVALID_GROWING = 8,
  HB_ERR_ALPHABET_MISMATCH = 9,
  HB_ERR_REGION_OVERLAP = 10,
  HB_ERR_NON_ESSENTIAL_REGION = 11,
  HB_ERR_NON_ORIENTABLE = 12,
  HB_ERR_EDGE_OVERUSE = 13,
  HB_ERR_MALFORMED_TREE = 14,
  HB_ERR_CHORD_CONFIG = 15,
  HB_ERR_IO = 16,
  HB_ERR_INTERNAL = 99
} hb_status;

typedef enum hb_format {
  HB_FORMAT_TEXT = 0,
  HB_FORMAT_STRUCTURED = 1,
  HB_FORMAT_JSON = 2
} hb_format;

typedef enum hb_verdict {
  HB_VERDICT_PRIME = 0,
  HB_VERDICT_COMPOSITE = 1,
  HB_VERDICT_INCONCLUSIVE = 2
} hb_verdict;

typedef struct hb_word hb_word;
typedef struct hb_tree hb_tree;
typedef struct hb_chords hb_chords;

HB_API const char* hb_version(void);
HB_API const char* hb_status_name(hb_status status);
HB_API const char* hb_last_error(void);
/* Token index for parse errors, edge index for non-essential edges, else -1. */
HB_API long hb_last_error_position(void);
HB_API void hb_string_free(char* s);

/* strands <= 0 selects the default (largest generator + 1). */
HB_API hb_status hb_word_parse(const char* text, int strands, hb_word** out);
HB_API void hb_word_free(hb_word* word);
HB_API int hb_word_strands(const hb_word* word);
HB_API size_t hb_word_length(const hb_word* word);
HB_API hb_status hb_word_render(const hb_word* word, char** out);
/* witness_strand may be NULL; it receives 0 unless the verdict is composite. */
HB_API hb_status hb_word_verdict(const hb_word* word, hb_verdict* verdict, int* witness_strand);
HB_API hb_status hb_word_report(const hb_word* word, const char* input_echo, int certify,
                                hb_format format, int color, char** out);
HB_API hb_status hb_word_surface_report(const hb_word* word, hb_format format, int color,
                                        char** out);

HB_API hb_status hb_tree_from_word(const hb_word* word, hb_tree** out);
HB_API hb_status hb_tree_from_plane_tree(const char* text, hb_tree** out);
HB_API hb_status hb_tree_read(const char* text, hb_tree** out);
HB_API void hb_tree_free(hb_tree* tree);
HB_API size_t hb_tree_vertex_count(const hb_tree* tree);
HB_API hb_status hb_tree_serialize(const hb_tree* tree, char** out);
/* With certify set and certification refused, *out still receives the report
 * and the refusal status (e.g. HB_ERR_NON_ESSENTIAL_EDGE) is returned. */
HB_API hb_status hb_tree_report(const hb_tree* tree, int certify, hb_format format, int color,
                                char** out);

HB_API hb_status hb_chords_parse(const char* text, hb_chords** out);
HB_API void hb_chords_free(hb_chords* chords);
/* equal receives 1 when both chord sets coincide, else 0. */
HB_API hb_status hb_chords_report(const hb_chords* chords, hb_format format, int color,
                                  int* equal, char** out);

HB_API hb_status hb_corpus(uint64_t seed, int count, int max_strands, int max_letters,
                           char** out);

#ifdef __cplusplus
}
#endif

#endif
