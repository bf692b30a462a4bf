#include "deltaspringer/ds_c_api.h"

#include <string>

#include "deltaspringer/service.hpp"

struct ds_session {
  std::string output;
  std::string error;
};

extern "C" {

ds_session* ds_session_new(void) { return new (std::nothrow) ds_session; }

void ds_session_free(ds_session* s) { delete s; }

int ds_eval(ds_session* s, const char* request_json) {
  if (!s) return DS_USAGE_ERROR;
  s->output.clear();
  s->error.clear();
  if (!request_json) {
    s->error = "null request";
    return DS_USAGE_ERROR;
  }
  try {
    ds::ServiceResult r = ds::eval_request(std::string(request_json));
    s->output = std::move(r.output);
    s->error = std::move(r.error);
    return r.status;
  } catch (const std::exception& e) {
    s->error = e.what();
    return DS_INTERNAL_ERROR;
  } catch (...) {
    s->error = "unknown failure";
    return DS_INTERNAL_ERROR;
  }
}

const char* ds_output(const ds_session* s) {
  return s ? s->output.c_str() : "";
}

const char* ds_error_message(const ds_session* s) {
  return s ? s->error.c_str() : "";
}

const char* ds_version(void) { return "delta-springer 1.0.0"; }

}  // extern "C"
