import json
import urllib.request

BASE_URL = 'https://api.example.com/v1'


class ApiError(Exception):
    pass


class Client(object):
    def __init__(self, token, base_url=BASE_URL, timeout=10):
        self.token = token
        self.base_url = base_url.rstrip('/')
        self.timeout = timeout

    def _headers(self):
        return {'Authorization': 'Bearer ' + self.token,
                'Content-Type': 'application/json'}

    def get(self, path, **params):
        query = '&'.join('%s=%s' % (k, v) for k, v in sorted(params.items()))
        url = self.base_url + path + ('?' + query if query else '')
        req = urllib.request.Request(url, headers=self._headers())
        with urllib.request.urlopen(req, timeout=self.timeout) as resp:
            if resp.status != 200:
                raise ApiError('unexpected status %d' % resp.status)
            return json.loads(resp.read().decode('utf-8'))
