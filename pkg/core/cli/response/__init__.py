from .response_class import KeyValueResponse, ORJSONResponse, render_response
