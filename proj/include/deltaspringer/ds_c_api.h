/* C interface to the delta-springer computation library.
 *
 * Requests are JSON documents of the form {"cmd": "...", ...arguments},
 * mirroring the CLI subcommands one to one; the reply is the exact byte
 * stream the CLI would print. Outputs are deterministic: the same request
 * always produces the same bytes.
 */
#ifndef DELTASPRINGER_DS_C_API_H
#define DELTASPRINGER_DS_C_API_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ds_session ds_session; /* opaque */

/* Status codes, also used as CLI exit codes. */
#define DS_OK 0
#define DS_VERIFY_FAILED 1
#define DS_USAGE_ERROR 2
#define DS_INTERNAL_ERROR 3

ds_session* ds_session_new(void);
void ds_session_free(ds_session* s);

/* Evaluates one request and returns a DS_* code. The strings returned by
 * ds_output / ds_error_message are owned by the session and stay valid
 * until the next ds_eval call on the same session or ds_session_free. */
int ds_eval(ds_session* s, const char* request_json);
const char* ds_output(const ds_session* s);
const char* ds_error_message(const ds_session* s);

const char* ds_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DELTASPRINGER_DS_C_API_H */
