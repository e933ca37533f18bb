#ifndef TWW_C_H
#define TWW_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(TWW_BUILDING_LIBRARY)
#define TWW_API __declspec(dllexport)
#else
#define TWW_API __declspec(dllimport)
#endif
#else
#define TWW_API __attribute__((visibility("default")))
#endif

typedef struct tww_graph tww_graph;
typedef struct tww_sequence tww_sequence;

typedef enum tww_status {
  TWW_OK = 0,
  TWW_REJECTED = 1,       /* well-formed input, negative answer */
  TWW_INVALID_INPUT = 2,  /* parse or schema error */
  TWW_PRECONDITION = 3,
  TWW_INCONCLUSIVE = 4,   /* oracle budget or size cap */
  TWW_INTERNAL = 5
} tww_status;

enum { TWW_FORMAT_DETECT = 0, TWW_FORMAT_EDGE_LIST = 1, TWW_FORMAT_GRAPH6 = 2 };
enum { TWW_DIAGRAM_SVG = 0, TWW_DIAGRAM_TEXT = 1 };

/* Message of the last failing call on this thread. */
TWW_API const char* tww_last_error(void);
/* Frees strings returned through char** out-parameters. */
TWW_API void tww_string_free(char* s);
TWW_API const char* tww_status_name(tww_status s);

/* Graphs. edges holds 2*m vertex ids. */
TWW_API tww_status tww_graph_from_edges(int n, const int* edges, size_t m, tww_graph** out);
TWW_API tww_status tww_graph_parse(const char* text, int format, tww_graph** out);
TWW_API tww_status tww_graph_read_file(const char* path, int format, tww_graph** out);
TWW_API void tww_graph_free(tww_graph* g);
TWW_API int tww_graph_order(const tww_graph* g);
TWW_API size_t tww_graph_size(const tww_graph* g);
TWW_API tww_status tww_graph_to_edge_list(const tww_graph* g, char** out);
TWW_API tww_status tww_graph_to_graph6(const tww_graph* g, char** out);
/* kind: caterpillar, random-tww1, random-realiser, random-graph, random-dh,
   random-tree, non-caterpillar-tree, path, cycle, complete, empty, star,
   spider, gem, house, domino. */
TWW_API tww_status tww_generate(const char* kind, int n, uint64_t seed, tww_graph** out);

/* Contraction sequences. */
TWW_API tww_status tww_sequence_parse_json(const char* text, tww_sequence** out);
TWW_API tww_status tww_sequence_to_json(const tww_sequence* s, char** out);
TWW_API void tww_sequence_free(tww_sequence* s);
TWW_API int tww_sequence_n(const tww_sequence* s);
TWW_API int tww_sequence_width(const tww_sequence* s);
TWW_API size_t tww_sequence_length(const tww_sequence* s);
TWW_API tww_status tww_sequence_step(const tww_sequence* s, size_t i, int* u, int* v);

/* Operations. Reports are JSON objects; any out-parameter may be NULL. */
TWW_API tww_status tww_recognize(const tww_graph* g, tww_sequence** seq, char** report);
TWW_API tww_status tww_verify(const tww_graph* g, const tww_sequence* s, int width, char** report);
/* budget 0 means unlimited. */
TWW_API tww_status tww_oracle(const tww_graph* g, int max_n, uint64_t budget, int* width, tww_sequence** witness);
/* cls receives -1 for graphs that are not distance-hereditary. */
TWW_API tww_status tww_dh_classify(const tww_graph* g, int* cls, tww_sequence** certificate, char** report);
TWW_API tww_status tww_diagram(const tww_graph* g, int format, char** out);
TWW_API tww_status tww_decompose(const tww_graph* g, char** json);
TWW_API tww_status tww_check_theory(const tww_graph* g, const tww_sequence* s, char** report);

#ifdef __cplusplus
}
#endif

#endif
