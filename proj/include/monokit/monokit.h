/* monokit -- finite-dimensional monotone-operator calculus.
 *
 * C interface to the shared library. All inputs and outputs are UTF-8 JSON
 * documents; the schemas are described in the project README. Sessions are
 * cheap and not thread-safe; operations themselves are pure.
 */
#ifndef MONOKIT_H
#define MONOKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MONOKIT_API __declspec(dllexport)
#else
#define MONOKIT_API __attribute__((visibility("default")))
#endif

/* Opaque session handle: holds the backend selection (float/exact),
 * tolerances, the suite seed and the last error message. */
typedef struct mk_session mk_session;

/* Status codes returned by mk_eval, mirrored by the CLI exit code. */
enum {
  MK_OK = 0,          /* operation ran; verdict true / result produced */
  MK_CHECK_FALSE = 1, /* operation ran; a check came back false */
  MK_ERROR = 2        /* usage or validation error; see mk_last_error */
};

/* config_json: {"backend": "float"|"exact", "tol_abs": , "tol_rel": ,
 * "seed": }, all fields optional; NULL means defaults. Returns NULL when the
 * configuration itself is malformed. */
MONOKIT_API mk_session* mk_session_new(const char* config_json);
MONOKIT_API void mk_session_free(mk_session* s);

/* Runs a named command on a JSON input document. *output_json receives a
 * malloc'd NUL-terminated document (an {"error": ...} object on failure);
 * release it with mk_buffer_free. Returns one of the status codes above. */
MONOKIT_API int mk_eval(mk_session* s, const char* command, const char* input_json,
                        char** output_json);

MONOKIT_API void mk_buffer_free(char* buf);

/* Message of the last failing mk_eval on this session, or "". */
MONOKIT_API const char* mk_last_error(const mk_session* s);

/* JSON array of available command names; free with mk_buffer_free. */
MONOKIT_API char* mk_commands(void);

MONOKIT_API const char* mk_version(void);

#ifdef __cplusplus
}
#endif

#endif
